import itertools

import numpy as np
import pytest

from polykoebe.selfcross import find_self_intersection


def _brute_force_crosses(pts):
    n = len(pts)

    def orient(a, b, c):
        return np.sign((b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real))

    for i, j in itertools.combinations(range(n), 2):
        if j - i in (0, 1, n - 1):
            continue
        a, b, c, d = pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]
        if orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0:
            return True
    return False


def test_circle_is_simple():
    pts = np.exp(2j * np.pi * np.arange(1000) / 1000)
    res = find_self_intersection(pts)
    assert res.crossing is None and not res.ambiguous
    assert 0 < res.margin <= 2 * np.sin(np.pi / 1000) * 2


def test_figure_eight_crosses():
    t = 2 * np.pi * np.arange(400) / 400
    # phase shift keeps the double point off the vertices
    res = find_self_intersection(np.sin(t + 0.003) + 1j * np.sin(2 * (t + 0.003)) / 2)
    assert res.crossing is not None
    i, j, s, u = res.crossing
    assert 0 <= s <= 1 and 0 <= u <= 1


def test_bowtie():
    res = find_self_intersection(np.array([0, 1 + 1j, 1, 1j]))
    assert res.crossing is not None
    i, j, s, u = res.crossing
    assert (s, u) == pytest.approx((0.5, 0.5))


def test_near_touch_is_ambiguous():
    # notch vertex 1e-12 above the bottom edge: inside the proximity band, no proper crossing
    pts = np.array([0, 4, 4 + 4j, 2.5 + 4j, 2 + 1e-12j, 1.5 + 4j, 4j])
    res = find_self_intersection(pts)
    assert res.crossing is None
    assert res.ambiguous


def test_exact_vertex_touch_is_not_a_proper_crossing():
    # polygon passing through one of its own vertices: flagged, not reported as a clean crossing
    pts = np.array([0, 2, 2 + 2j, 1 + 0j, 0 + 2j], dtype=complex)
    res = find_self_intersection(pts)
    assert res.crossing is None
    assert res.ambiguous


def test_against_brute_force(rng):
    for _ in range(300):
        n = int(rng.integers(4, 25))
        if rng.random() < 0.5:
            # star-shaped and therefore simple
            ang = np.sort(rng.uniform(0, 2 * np.pi, n))
            pts = rng.uniform(0.5, 1.5, n) * np.exp(1j * ang)
        else:
            pts = rng.normal(size=n) + 1j * rng.normal(size=n)
        res = find_self_intersection(pts)
        assert (res.crossing is not None) == _brute_force_crosses(pts)
