"""Normalized polynomials ``z + a_2 z^2 + ... + a_N z^N`` and the two families.

``q_N`` is Suffridge's polynomial, ``p_N`` the family built from Chebyshev
derivative ratios at ``c_N``; the latter is the conjectured extremal for the
polynomial Koebe problem.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .chebyshev import c_param, cheb_u_all, node_radius


class FamilyKind(Enum):
    SUFFRIDGE = "suffridge"
    PN = "pn"


@dataclass(frozen=True, eq=False)
class RealPolynomial:
    """Real coefficients ``(a_1, ..., a_N)`` with ``a_1 = 1``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).ravel()
        if c.size == 0:
            raise ValueError("a polynomial needs at least the linear coefficient")
        if c[0] != 1.0:
            raise ValueError(f"leading coefficient a_1 must be 1, got {c[0]!r}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_tail(cls, tail):
        """Build from ``(a_2, ..., a_N)``; ``a_1 = 1`` is implied."""
        return cls(np.concatenate(([1.0], np.asarray(tail, dtype=float).ravel())))

    @property
    def degree(self):
        return self.coeffs.size

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, RealPolynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"RealPolynomial({self.coeffs.tolist()!r})"


IDENTITY = RealPolynomial([1.0])


def _check_family_degree(N):
    if int(N) != N or N < 1:
        raise ValueError(f"degree must be a positive integer, got {N!r}")
    return int(N)


def suffridge_coeffs(N):
    N = _check_family_degree(N)
    k = np.arange(1, N + 1)
    a = (N - k + 1) / N * np.sin(np.pi * k / (N + 1)) / math.sin(math.pi / (N + 1))
    a[0] = 1.0
    a[-1] = 1.0 / N
    return RealPolynomial(a)


def pn_coeffs(N):
    """Coefficients ``B_{k,N} = U'_{N-k+1}(c_N) / U'_N(c_N) * U_{k-1}(c_N)``."""
    N = _check_family_degree(N)
    c = c_param(N)
    u, du = cheb_u_all(N, c)
    denom = du[N]
    if not np.isfinite(denom) or denom == 0.0:
        raise ArithmeticError(f"U'_{N}(c_{N}) is not representable: {denom!r}")
    k = np.arange(1, N + 1)
    b = du[N - k + 1] / denom * u[k - 1]
    if b[-1] == 0.0:
        raise ArithmeticError(f"p_{N} lost its top coefficient")
    return RealPolynomial(b)


def family_coeffs(kind, N):
    kind = FamilyKind(kind)
    return suffridge_coeffs(N) if kind is FamilyKind.SUFFRIDGE else pn_coeffs(N)


def reflect(p):
    """``p*(z) = -p(-z)``: coefficient ``a_k`` picks up ``(-1)**(k+1)``."""
    signs = np.where(np.arange(p.degree) % 2 == 0, 1.0, -1.0)
    return RealPolynomial(p.coeffs * signs)


def evaluate(p, z):
    """Horner evaluation of ``sum a_k z**k``; ``z`` may be an array."""
    coeffs = p.coeffs if isinstance(p, RealPolynomial) else np.asarray(p)
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for a in coeffs[::-1]:
        acc = (acc + a) * z
    return complex(acc) if acc.ndim == 0 else acc


def koebe_eval(z):
    z = complex(z)
    if z == 1:
        raise ValueError("the Koebe function has a pole at z = 1")
    return z / (1 - z) ** 2


def suffridge_minus_one(N):
    """Closed form of ``q_N(-1)``."""
    N = _check_family_degree(N)
    return -(N + 1) / (4 * N) / math.cos(math.pi / (2 * (N + 1))) ** 2


def conjectured_radius(N):
    return node_radius(N)
