import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_min_modulus, dense_mu, sample_region
from polykoebe.circle import MinModResult, boundary_curve, min_modulus, min_modulus_rows, mu_functional
from polykoebe.cubic import min_modulus_closed_form
from polykoebe.polyfamily import IDENTITY, RealPolynomial, conjectured_radius, evaluate, pn_coeffs, reflect, suffridge_coeffs

SQ5 = math.sqrt(5)

real_polys = st.lists(st.floats(-2, 2, allow_nan=False), min_size=1, max_size=8).map(
    lambda tail: RealPolynomial([1.0] + tail))


def _check_result(p, res, tol=1e-10):
    for z in res.minimizers:
        assert abs(abs(z) - 1) <= 1e-12
        assert abs(abs(evaluate(p, z)) - res.value) <= max(tol, 1e-12)


def test_p3():
    p3 = pn_coeffs(3)
    res = min_modulus(p3)
    assert res.value == pytest.approx((3 - SQ5) / 2, abs=1e-10)
    assert res.minimizers == [complex(-1, 0)]
    assert res.refined and not res.whole_circle
    _check_result(p3, res)


def test_q3():
    q3 = suffridge_coeffs(3)
    res = min_modulus(q3)
    assert res.value == pytest.approx(2 / (3 * math.sqrt(3)), abs=1e-10)
    assert len(res.minimizers) == 2
    up, down = res.minimizers
    assert up.imag > 0 and down == up.conjugate()
    assert up.real == pytest.approx(-2 * math.sqrt(2) / 3, abs=1e-8)
    assert up.imag == pytest.approx(1 / 3, abs=1e-8)
    _check_result(q3, res)


def test_identity_whole_circle():
    res = min_modulus(IDENTITY)
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert res.whole_circle and not res.refined
    assert res.minimizers == []


def test_preconditions():
    with pytest.raises(ValueError):
        min_modulus(pn_coeffs(10), grid_size=79)
    min_modulus(pn_coeffs(10), grid_size=80)
    with pytest.raises(ValueError):
        min_modulus(pn_coeffs(3), tol=0)
    with pytest.raises(ValueError):
        boundary_curve(pn_coeffs(3), samples=2)


def test_round_trip():
    res = min_modulus(suffridge_coeffs(3))
    assert MinModResult.from_dict(res.to_dict()) == res


def test_cubic_closed_form_agreement(rng):
    pts = sample_region(rng, 500)
    for a2, a3 in pts:
        p = RealPolynomial([1.0, a2, a3])
        assert abs(min_modulus(p).value - min_modulus_closed_form((a2, a3))) <= 1e-8


def test_batched_rows_agree(rng):
    pts = sample_region(rng, 200)
    C = np.column_stack((np.ones(len(pts)), pts))
    vals, _ = min_modulus_rows(C, 4096)
    single = np.array([min_modulus(RealPolynomial(row)).value for row in C])
    assert np.max(np.abs(vals - single)) <= 1e-12


@pytest.mark.parametrize("complex_coeffs", [False, True])
def test_against_dense_grid(rng, complex_coeffs):
    for _ in range(60):
        N = int(rng.integers(2, 13))
        tail = rng.normal(size=N - 1) / np.arange(2, N + 1)
        if complex_coeffs:
            tail = tail + 1j * rng.normal(size=N - 1) / np.arange(2, N + 1)
        c = np.concatenate(([1.0], tail))
        res = min_modulus(c if complex_coeffs else RealPolynomial(c))
        grid_val, _ = dense_min_modulus(c)
        # refined value never above the grid and within the grid's resolution of it
        assert res.value <= grid_val + 1e-12
        slope = float(np.sum(np.abs(c) * np.arange(1, N + 1)))
        assert grid_val - res.value <= slope * (2 * math.pi / (1 << 16))
        for z in res.minimizers:
            assert abs(abs(z) - 1) <= 1e-12
            assert abs(abs(np.polynomial.polynomial.polyval(z, np.concatenate(([0], c)))) - res.value) <= 1e-10


@given(real_polys)
@settings(max_examples=150, deadline=None)
def test_reflection_symmetry(p):
    a, b = min_modulus(p), min_modulus(reflect(p))
    assert abs(a.value - b.value) <= 1e-10
    if a.whole_circle:
        return
    mapped = sorted((round(-z.real, 6), round(z.imag, 6)) for z in a.minimizers)
    # the reflected minimizer set is -conj of the original; compare as sets up to clustering
    other = sorted((round(z.real, 6), round(z.imag, 6)) for z in b.minimizers)
    if len(mapped) == len(other):
        assert np.allclose(mapped, other, atol=2e-6)


def test_minimizers_listed_upper_first():
    res = min_modulus(suffridge_coeffs(5))
    n_upper = sum(1 for z in res.minimizers if z.imag >= 0)
    assert all(z.imag >= 0 for z in res.minimizers[:n_upper])


def test_koebe_floor_on_families():
    for N in range(1, 31):
        for p in (pn_coeffs(N), suffridge_coeffs(N)):
            assert min_modulus(p).value >= 0.25 - 1e-9


def test_mu_examples():
    assert mu_functional(IDENTITY) == pytest.approx(-1.0, abs=1e-15)
    assert mu_functional(RealPolynomial([1, 0.5])) == pytest.approx(-0.5, abs=1e-12)
    assert mu_functional(pn_coeffs(3)) == pytest.approx(-(3 - SQ5) / 2, abs=1e-12)


def test_mu_on_pn_family():
    for N in range(1, 101):
        assert abs(mu_functional(pn_coeffs(N)) + conjectured_radius(N)) <= 1e-9


@given(real_polys)
@settings(max_examples=200, deadline=None)
def test_mu_bounded_by_real_endpoints(p):
    bound = min(evaluate(p, 1).real, evaluate(p, -1).real)
    assert mu_functional(p) <= bound + 1e-12


def test_mu_against_dense_scan(rng):
    for _ in range(100):
        N = int(rng.integers(2, 10))
        c = np.concatenate(([1.0], rng.normal(size=N - 1) / np.arange(2, N + 1)))
        assert mu_functional(RealPolynomial(c)) == pytest.approx(dense_mu(c), abs=1e-6)


def test_mu_rejects_complex():
    with pytest.raises(ValueError):
        mu_functional(np.array([1.0, 0.2j]))


def test_boundary_curve():
    pts = boundary_curve(IDENTITY, 4)
    assert np.allclose(pts, [1, 1j, -1, -1j], atol=1e-15)
    p3 = pn_coeffs(3)
    pts = boundary_curve(p3, 64)
    assert pts[0] == pytest.approx(1 + 2 / SQ5 + (1 - 1 / SQ5) / 2, abs=1e-14)
    assert pts[32] == pytest.approx(-(3 - SQ5) / 2, abs=1e-14)
    steps = np.abs(np.diff(np.append(pts, pts[0])))
    assert steps[-1] <= 10 * steps[0] and steps[0] <= 10 * steps[-1]


def test_pn_minimum_at_minus_one_experiment():
    # m(p_N) = |p_N(-1)| is unproven, so it is reported, not asserted
    gaps = []
    for N in range(1, 101):
        p = pn_coeffs(N)
        m = min_modulus(p).value
        end = abs(evaluate(p, -1))
        assert m <= end + 1e-10
        gaps.append(end - m)
    print(f"max |p_N(-1)| - m(p_N) over N <= 100: {max(gaps):.3e}")
