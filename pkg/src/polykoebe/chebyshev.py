"""Chebyshev polynomials of the second kind and the node parameter ``c_N``.

Values and derivatives are produced by the forward three-term recurrence,
which is valid for every real ``t`` and has no singularity at ``t = +-1``.
"""

import mpmath
import numpy as np

# working precision for the node; one rounding to double at the end
NODE_DPS = 40


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    return int(n)


def cheb_u_all(n, t):
    """Return ``(U_0(t), ..., U_n(t))`` and their derivatives as two arrays.

    ``t`` may be a scalar or an array; the result has a leading axis of
    length ``n + 1``.
    """
    n = _check_degree(n)
    t = np.asarray(t, dtype=float)
    u = np.empty((n + 1,) + t.shape)
    du = np.empty_like(u)
    u[0] = 1.0
    du[0] = 0.0
    if n >= 1:
        u[1] = 2.0 * t
        du[1] = 2.0
    for k in range(1, n):
        u[k + 1] = 2.0 * t * u[k] - u[k - 1]
        du[k + 1] = 2.0 * u[k] + 2.0 * t * du[k] - du[k - 1]
    return u, du


def cheb_u(n, t):
    """Evaluate ``U_n(t)``."""
    n = _check_degree(n)
    t = np.asarray(t, dtype=float)
    prev, cur = np.zeros_like(t), np.ones_like(t)
    for _ in range(n):
        prev, cur = cur, 2.0 * t * cur - prev
    return float(cur) if cur.ndim == 0 else cur


def cheb_u_prime(n, t):
    """Evaluate ``U_n'(t)`` by differentiating the recurrence alongside it."""
    n = _check_degree(n)
    t = np.asarray(t, dtype=float)
    u_prev, u = np.zeros_like(t), np.ones_like(t)
    d_prev, d = np.zeros_like(t), np.zeros_like(t)
    for _ in range(n):
        u_prev, u, d_prev, d = (
            u,
            2.0 * t * u - u_prev,
            d,
            2.0 * u + 2.0 * t * d - d_prev,
        )
    return float(d) if d.ndim == 0 else d


def _check_node_index(N):
    if int(N) != N or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    return int(N)


def c_param(N):
    """``cos(pi / (N + 2))``, the largest zero of ``U_{N+1}``, correctly rounded."""
    N = _check_node_index(N)
    with mpmath.workdps(NODE_DPS):
        return float(mpmath.cospi(mpmath.mpf(1) / (N + 2)))


def node_radius(N):
    """``1 / (4 c_N^2)`` rounded once, so ``N = 1, 2`` give exactly 1 and 1/2."""
    N = _check_node_index(N)
    with mpmath.workdps(NODE_DPS):
        return float(1 / (4 * mpmath.cospi(mpmath.mpf(1) / (N + 2)) ** 2))
