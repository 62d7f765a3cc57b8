"""Numerical univalence evidence for normalized polynomials on the unit disk.

Stage 1 locates the critical points (roots of ``p'``): one strictly inside
the tested disk makes ``p`` locally two-to-one there. Stage 2 checks that
the image of the circle ``|z| = r`` is a simple closed curve; by the
argument principle ``p`` is then injective on ``|z| < r``.

The verdict is evidence, not proof: ``UNIVALENT_OPEN_DISK`` means the
polygonal image at the tested radius is simple.
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np

from .polyfamily import RealPolynomial
from .selfcross import find_self_intersection

WITNESS_TOL = 1e-10
WITNESS_MIN_GAP = 1e-6
PROXIMITY_BAND = 1e-10
DEFAULT_RADII = (0.99, 0.999, 0.9999)


class Verdict(Enum):
    UNIVALENT_OPEN_DISK = "UnivalentOpenDisk"
    NOT_UNIVALENT = "NotUnivalent"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class UnivalenceReport:
    verdict: Verdict
    derivative_root_moduli: list = field(default_factory=list)
    boundary_radius: float = 0.0
    injectivity_margin: float = 0.0
    witness: tuple = None
    reason: str = ""

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "derivative_root_moduli": list(self.derivative_root_moduli),
            "boundary_radius": self.boundary_radius,
            "injectivity_margin": self.injectivity_margin,
            "witness": None if self.witness is None else [[z.real, z.imag] for z in self.witness],
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d):
        w = d.get("witness")
        return cls(
            verdict=Verdict(d["verdict"]),
            derivative_root_moduli=list(d["derivative_root_moduli"]),
            boundary_radius=d["boundary_radius"],
            injectivity_margin=d["injectivity_margin"],
            witness=None if w is None else tuple(complex(re, im) for re, im in w),
            reason=d.get("reason", ""),
        )


def _coeffs(p):
    if isinstance(p, RealPolynomial):
        return p.coeffs.astype(complex)
    c = np.asarray(p, dtype=complex).ravel()
    if c.size == 0 or c[0] != 1:
        raise ValueError("coefficients must start with a_1 = 1")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    return c


def _horner(c, z):
    """Value of ``sum c[k] z**k`` (ascending powers, constant term first)."""
    acc = np.zeros_like(np.asarray(z, dtype=complex))
    for a in c[::-1]:
        acc = acc * z + a
    return acc


def aberth_roots(c, tol=1e-12, max_iter=1000):
    """All roots of ``sum c[k] z**k`` by Aberth-Ehrlich simultaneous iteration.

    ``c`` lists coefficients in ascending powers. Iteration runs until the
    corrections stall; the monic residual is then expected below ``tol``.
    """
    c = np.asarray(c, dtype=complex)
    while c.size > 1 and c[-1] == 0:
        c = c[:-1]
    n = c.size - 1
    if n < 1:
        return np.empty(0, dtype=complex)
    mono = c / c[-1]
    dmono = mono[1:] * np.arange(1, n + 1)
    radius = 1.5 * abs(mono[0]) ** (1.0 / n) if mono[0] != 0 else 1.0
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))
    for _ in range(max_iter):
        pz = _horner(mono, z)
        dz = _horner(dmono, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * (1.0 + np.abs(z))):
            break
    residual = np.abs(_horner(mono, z))
    if np.any(residual > tol * max(1.0, float(np.max(np.abs(mono))))):
        # one Newton sweep tidies isolated roots that stalled early
        z = z - _horner(mono, z) / np.where(_horner(dmono, z) != 0, _horner(dmono, z), 1.0)
    return z


def derivative_coeffs(c):
    """Ascending coefficients of ``p'`` for ``p = sum c[k] z**(k+1)``."""
    return c * np.arange(1, c.size + 1)


def _poly(c, z):
    return _horner(c, z) * z


def _dpoly(c, z):
    return _horner(derivative_coeffs(c), z)


def _solve_preimage(c, w, z, iters=60):
    for _ in range(iters):
        d = _dpoly(c, z)
        if d == 0:
            break
        step = (_poly(c, z) - w) / d
        z = z - step
        if abs(step) < 1e-17:
            break
    return complex(z)


def _valid_witness(c, z1, z2):
    return (
        abs(z1) < 1.0 and abs(z2) < 1.0
        and abs(z1 - z2) >= WITNESS_MIN_GAP
        and abs(_poly(c, z1) - _poly(c, z2)) <= WITNESS_TOL
    )


def _critical_witness(c, crit):
    """Two distinct points near the critical point ``crit`` with equal images."""
    r = abs(crit)
    # first non-vanishing Taylor order at crit (>= 2)
    order, deriv = 2, derivative_coeffs(c)
    d = deriv
    while order <= c.size:
        d = d[1:] * np.arange(1, d.size)
        if d.size == 0 or abs(_horner(d, crit)) > 1e-8:
            break
        order += 1
    if order == 2:
        # tangential offsets keep |crit -+ h u|^2 = r^2 + h^2 inside the disk
        u = 1j * crit / r if r > 0 else 1.0
        h = min(1e-3, 0.5 * math.sqrt(max(0.0, 1.0 - r * r)))
        seeds = (crit + h * u, crit - h * u)
    else:
        h = min(1e-3, 0.25 * (1.0 - r))
        seeds = (crit + h, crit + h * np.exp(2j * np.pi / order))
    z1 = complex(seeds[0])
    z2 = _solve_preimage(c, _poly(c, z1), complex(seeds[1]))
    return (z1, z2) if _valid_witness(c, z1, z2) else None


def _crossing_witness(c, radius, theta, crossing):
    """Polish a polygon crossing into an exact double point on ``|z| = radius``."""
    i, j, s, u = crossing
    n = theta.size
    step = 2.0 * math.pi / n
    alpha = theta[i] + s * step
    beta = theta[j] + u * step
    for _ in range(60):
        z1 = radius * np.exp(1j * alpha)
        z2 = radius * np.exp(1j * beta)
        F = _poly(c, z1) - _poly(c, z2)
        if abs(F) < 1e-15:
            break
        ja = _dpoly(c, z1) * 1j * z1
        jb = -_dpoly(c, z2) * 1j * z2
        J = np.array([[ja.real, jb.real], [ja.imag, jb.imag]])
        try:
            da, db = np.linalg.solve(J, [-F.real, -F.imag])
        except np.linalg.LinAlgError:
            break
        alpha += da
        beta += db
        if abs(da) + abs(db) < 1e-16:
            break
    z1 = complex(radius * np.exp(1j * alpha))
    z2 = complex(radius * np.exp(1j * beta))
    return (z1, z2) if _valid_witness(c, z1, z2) else None


def default_samples(degree, radius):
    # the guard stops 1 - 0.9999 rounding from adding a sample
    return math.ceil(64 * degree / math.sqrt(1.0 - radius) * (1.0 - 1e-12))


def check_univalent(p, radius=0.999, curve_samples=None):
    """Two-stage univalence check on the disk ``|z| < radius``."""
    c = _coeffs(p)
    N = c.size
    if not 0.9 <= radius < 1.0:
        raise ValueError(f"radius must lie in [0.9, 1), got {radius!r}")
    if curve_samples is None:
        curve_samples = default_samples(N, radius)
    if int(curve_samples) != curve_samples or curve_samples < 64 * N:
        raise ValueError(f"curve_samples must be an integer >= 64*degree = {64 * N}, got {curve_samples!r}")
    curve_samples = int(curve_samples)

    crit = aberth_roots(derivative_coeffs(c))
    moduli = sorted(float(abs(z)) for z in crit)
    # |a_N| > 1/N forces a critical point inside the unit disk
    top_heavy = N >= 2 and abs(c[-1]) > 1.0 / N
    threshold = 1.0 - 1e-12 if top_heavy else radius
    inside = [z for z in crit if abs(z) < threshold]
    for z in sorted(inside, key=abs):
        w = _critical_witness(c, complex(z))
        if w is not None:
            return UnivalenceReport(Verdict.NOT_UNIVALENT, moduli, radius, 0.0, w,
                                    f"critical point at |z| = {abs(z):.12g}")
    if any(abs(z) < radius for z in crit):
        return UnivalenceReport(Verdict.INCONCLUSIVE, moduli, radius, 0.0, None,
                                "critical point inside the disk but no witness could be built")

    theta = 2.0 * math.pi * np.arange(curve_samples) / curve_samples
    curve = _poly(c, radius * np.exp(1j * theta))
    sweep = find_self_intersection(curve, band=PROXIMITY_BAND)
    if sweep.crossing is not None:
        w = _crossing_witness(c, radius, theta, sweep.crossing)
        if w is not None:
            return UnivalenceReport(Verdict.NOT_UNIVALENT, moduli, radius, 0.0, w,
                                    "boundary image self-intersects")
        return UnivalenceReport(Verdict.INCONCLUSIVE, moduli, radius, 0.0, None,
                                "polygon crossing did not refine to a double point")
    if sweep.ambiguous:
        return UnivalenceReport(Verdict.INCONCLUSIVE, moduli, radius, float(sweep.margin), None,
                                "boundary image comes within the proximity band")
    return UnivalenceReport(Verdict.UNIVALENT_OPEN_DISK, moduli, radius, float(sweep.margin), None,
                            "critical points outside and boundary image simple")


def escalate_radius(p, radii=DEFAULT_RADII):
    """Run :func:`check_univalent` at increasing radii.

    A ``NOT_UNIVALENT`` verdict at any radius is final. Otherwise the report
    at the largest radius with a definitive verdict is returned, or the last
    inconclusive one if none is definitive.
    """
    radii = [float(r) for r in radii]
    if not radii or any(not 0.9 <= r < 1.0 for r in radii) or radii != sorted(radii):
        raise ValueError(f"radii must be an ascending list inside [0.9, 1), got {radii!r}")
    N = _coeffs(p).size
    best = last = None
    for r in radii:
        rep = check_univalent(p, r, default_samples(N, r))
        if rep.verdict is Verdict.NOT_UNIVALENT:
            return rep
        if rep.verdict is Verdict.UNIVALENT_OPEN_DISK:
            best = rep
        last = rep
    return best if best is not None else last
