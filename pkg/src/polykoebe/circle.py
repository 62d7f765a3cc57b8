"""Behaviour of a polynomial on the unit circle.

``min_modulus`` computes ``m(p) = min |p(zeta)|`` over ``|zeta| = 1``,
``mu_functional`` the smallest real crossing of the image curve, and
``boundary_curve`` samples ``p(T)`` for plotting.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .chebyshev import cheb_u_all
from .polyfamily import RealPolynomial

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
GOLDEN_ITERATIONS = 60
CLUSTER_ARC = 1e-6
FLAT_VARIANCE = 1e-14
BISECT_TOL = 1e-13
MIN_CURVE_SAMPLES = 4


@dataclass(frozen=True)
class MinModResult:
    value: float
    minimizers: list = field(default_factory=list)
    refined: bool = True
    whole_circle: bool = False

    def to_dict(self):
        return {
            "value": self.value,
            "minimizers": [[z.real, z.imag] for z in self.minimizers],
            "refined": self.refined,
            "whole_circle": self.whole_circle,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            value=d["value"],
            minimizers=[complex(re, im) for re, im in d["minimizers"]],
            refined=d["refined"],
            whole_circle=d["whole_circle"],
        )


def _coeff_array(p):
    if isinstance(p, RealPolynomial):
        return p.coeffs
    c = np.asarray(p)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("expected a nonempty coefficient vector (a_1, ..., a_N)")
    if np.iscomplexobj(c) and not np.any(c.imag):
        c = c.real
    return c


def _modsq_rows(C, theta):
    """``|p_r(e^{i theta})|**2`` for coefficient rows ``C`` and angles shaped ``(rows, ...)``."""
    z = np.exp(1j * theta)
    acc = np.zeros_like(z)
    extra = (slice(None),) + (None,) * (theta.ndim - 1)
    for k in range(C.shape[1] - 1, -1, -1):
        acc = (acc + C[:, k][extra]) * z
    return acc.real ** 2 + acc.imag ** 2


def _modsq_derivatives(C, theta):
    """First and second ``theta``-derivatives of ``|p(e^{i theta})|**2``, one angle per row."""
    z = np.exp(1j * theta)
    # q(z) = p(z) / z = sum C[k] z**k ; p = z q, p' = q + z q', p'' = 2 q' + z q''
    q = np.zeros_like(z)
    dq = np.zeros_like(z)
    d2q = np.zeros_like(z)
    for k in range(C.shape[1] - 1, -1, -1):
        d2q = d2q * z + 2.0 * dq
        dq = dq * z + q
        q = q * z + C[:, k]
    p = z * q
    dp = q + z * dq
    d2p = 2.0 * dq + z * d2q
    zdp = z * dp
    first = 2.0 * np.real(np.conj(p) * 1j * zdp)
    second = 2.0 * (np.abs(zdp) ** 2 - np.real(np.conj(p) * (z * z * d2p + zdp)))
    return first, second


def _golden_refine(C, rows, center, half_width):
    """Vectorized golden-section search on ``|p|**2`` over ``[center -+ half_width]``."""
    a = center - half_width
    b = center + half_width
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    Cr = C[rows]
    fc = _modsq_rows(Cr, c)
    fd = _modsq_rows(Cr, d)
    for _ in range(GOLDEN_ITERATIONS):
        left = fc < fd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        new_c = b - GOLDEN * (b - a)
        new_d = a + GOLDEN * (b - a)
        x_new = np.where(left, new_c, new_d)
        f_new = _modsq_rows(Cr, x_new)
        c, d, fc, fd = (
            np.where(left, new_c, d),
            np.where(left, c, new_d),
            np.where(left, f_new, fd),
            np.where(left, fc, f_new),
        )
    theta = 0.5 * (a + b)
    f = _modsq_rows(Cr, theta)
    f0 = _modsq_rows(Cr, center)
    worse = f0 < f
    theta = np.where(worse, center, theta)
    f = np.where(worse, f0, f)
    # Golden section stalls at sqrt(eps) in theta; a few guarded Newton steps
    # on the derivative pin the location without moving the value. Steps are
    # judged against the rounding noise of |p|^2, not its last ulp.
    noise = 16.0 * np.finfo(float).eps * np.sum(np.abs(Cr), axis=1) ** 2
    for _ in range(3):
        g1, g2 = _modsq_derivatives(Cr, theta)
        ok = g2 > 0
        step = np.where(ok, -g1 / np.where(ok, g2, 1.0), 0.0)
        step = np.where(np.abs(step) <= 1e-6, step, 0.0)
        trial = theta + step
        ft = _modsq_rows(Cr, trial)
        accept = ft <= f + noise
        theta = np.where(accept, trial, theta)
        f = np.where(accept, ft, f)
    return theta, f


def _grid(C, grid_size, real):
    if real:
        theta = np.linspace(0.0, math.pi, grid_size + 1)
    else:
        theta = np.arange(grid_size) * (2.0 * math.pi / grid_size)
    f = _modsq_rows(C, np.broadcast_to(theta, (C.shape[0], theta.size)).copy())
    return theta, f


def _grid_local_minima(f, real):
    """Boolean mask of grid-local minima; the half-circle grid is mirrored at its ends."""
    if real:
        pad = np.concatenate((f[:, 1:2], f, f[:, -2:-1]), axis=1)
    else:
        pad = np.concatenate((f[:, -1:], f, f[:, :1]), axis=1)
    return (f <= pad[:, :-2]) & (f <= pad[:, 2:])


def _fold(theta, real):
    theta = np.mod(theta + math.pi, 2.0 * math.pi) - math.pi
    return np.abs(theta) if real else np.mod(theta, 2.0 * math.pi)


def _check_grid(grid_size, degree):
    if int(grid_size) != grid_size or grid_size < 8 * degree:
        raise ValueError(f"grid_size must be an integer >= 8*degree = {8 * degree}, got {grid_size!r}")
    return int(grid_size)


def min_modulus(p, grid_size=4096, tol=1e-10):
    """Global minimum of ``|p|`` on the unit circle with all (near-)minimizers.

    Real coefficients are searched on the upper half circle only and the
    conjugate minimizers are appended after the upper ones.
    """
    C = _coeff_array(p)
    grid_size = _check_grid(grid_size, C.size)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    real = not np.iscomplexobj(C)
    C2 = C[None, :].astype(complex)
    theta, f = _grid(C2, grid_size, real)
    f = f[0]
    if np.var(f) < FLAT_VARIANCE:
        return MinModResult(math.sqrt(float(np.mean(f))), [], refined=False, whole_circle=True)

    idx = np.flatnonzero(_grid_local_minima(f[None, :], real)[0])
    h = theta[1] - theta[0]
    th, fv = _golden_refine(C2, np.zeros(idx.size, dtype=int), theta[idx], np.full(idx.size, h))
    th = _fold(th, real)
    vals = np.sqrt(fv)
    best = vals.min()
    keep = vals <= best + tol
    order = np.lexsort((th[keep], vals[keep]))
    cand_t, cand_v = th[keep][order], vals[keep][order]

    chosen = []
    for t in cand_t:
        if all(_arc(t, s) > CLUSTER_ARC for s in chosen):
            chosen.append(t)
    chosen.sort()
    upper = [_on_circle(t) for t in chosen]
    zs = list(upper)
    if real:
        zs += [z.conjugate() for t, z in zip(chosen, upper) if CLUSTER_ARC / 2 < t < math.pi - CLUSTER_ARC / 2]
    return MinModResult(float(best), zs, refined=True)


def _arc(s, t):
    d = abs(s - t) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


def _on_circle(t):
    if t == 0.0:
        return complex(1.0, 0.0)
    if abs(t - math.pi) < 1e-15:
        return complex(-1.0, 0.0)
    return complex(math.cos(t), math.sin(t))


def min_modulus_rows(C, grid_size=None):
    """Batched ``m(p)`` for real coefficient rows; returns values and a best angle per row."""
    C = np.asarray(C, dtype=float)
    if C.ndim != 2:
        raise ValueError("expected a 2-D array of coefficient rows")
    grid_size = _check_grid(grid_size if grid_size is not None else max(64, 8 * C.shape[1]), C.shape[1])
    Cc = C.astype(complex)
    theta, f = _grid(Cc, grid_size, True)
    mask = _grid_local_minima(f, True)
    rows, cols = np.nonzero(mask)
    h = theta[1] - theta[0]
    th, fv = _golden_refine(Cc, rows, theta[cols], np.full(cols.size, h))
    th = _fold(th, True)
    best = np.full(C.shape[0], np.inf)
    np.minimum.at(best, rows, fv)
    # smallest angle among the row's minima achieving the best value
    is_best = fv <= best[rows]
    best_theta = np.full(C.shape[0], np.inf)
    np.minimum.at(best_theta, rows[is_best], th[is_best])
    return np.sqrt(best), best_theta


def mu_functional(p):
    """Smallest ``Re p(zeta)`` over points where the image curve crosses the real axis.

    With ``t = cos(theta)``, ``Im p = sin(theta) * Q(t)`` where
    ``Q = sum a_k U_{k-1}``. Crossings are ``t = +-1`` and the sign changes of
    ``Q`` in ``(-1, 1)``; even-order zeros of ``Q`` are tangencies and do not
    count (``p_N`` has several).
    """
    C = _coeff_array(p)
    if np.iscomplexobj(C):
        raise ValueError("mu_functional needs real coefficients")
    N = C.size
    ts = np.linspace(-1.0, 1.0, 64 * N + 1)
    Q = _q_values(C, ts)
    # |U_{k-1}| <= k on [-1, 1] bounds the rounding error of Q
    noise = 64.0 * np.finfo(float).eps * float(np.sum(np.abs(C) * np.arange(1, N + 1)))
    live = np.flatnonzero(np.abs(Q) > noise)
    flips = live[:-1][Q[live[:-1]] * Q[live[1:]] < 0]
    nxt = live[1:][Q[live[:-1]] * Q[live[1:]] < 0]
    roots = [ts[0], ts[-1]]
    if flips.size:
        roots += _bisect_q(C, ts[flips], ts[nxt]).tolist()
    t = np.clip(np.asarray(roots), -1.0, 1.0)
    k = np.arange(1, N + 1)
    re = np.cos(np.outer(np.arccos(t), k)) @ C
    return float(re.min())


def _q_values(C, t):
    u, _ = cheb_u_all(C.size - 1, t)
    return np.tensordot(C, u, axes=1)


def _bisect_q(C, lo, hi):
    flo = _q_values(C, lo)
    while np.max(hi - lo) > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        fm = _q_values(C, mid)
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fm, flo)
        hi = np.where(left, hi, mid)
    return 0.5 * (lo + hi)


def boundary_curve(p, samples=512):
    """``p(e^{2 pi i k / samples})`` for ``k = 0..samples-1``."""
    if int(samples) != samples or samples < MIN_CURVE_SAMPLES:
        raise ValueError(f"samples must be an integer >= {MIN_CURVE_SAMPLES}, got {samples!r}")
    C = _coeff_array(p)
    theta = 2.0 * math.pi * np.arange(int(samples)) / samples
    z = np.exp(1j * theta)
    acc = np.zeros_like(z)
    for a in C[::-1]:
        acc = (acc + a) * z
    return acc
