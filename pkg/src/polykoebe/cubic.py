"""Exact theory of real cubics ``z + a2 z^2 + a3 z^3``.

The univalence region ``V`` in the ``(a2, a3)`` plane is bounded by three
pieces in ``a2 >= 0`` and their mirror images:

* ``G1``: the segment of ``2 a2 - 3 a3 = 1`` from ``(0, -1/3)`` to ``(4/5, 1/5)``;
* ``G2``: the ellipse arc ``a2^2 = 4 a3 (1 - a3)`` from ``(4/5, 1/5)`` to
  ``(2 sqrt(2)/3, 1/3)``;
* ``G3``: the segment ``a3 = 1/3`` from ``(2 sqrt(2)/3, 1/3)`` to ``(0, 1/3)``.

On the circle ``|p(x + iy)|^2`` is the quadratic ``Phi(x)``, which gives a
closed form for the minimum modulus and the Type I / Type II split.
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np

from .circle import GOLDEN, min_modulus_rows
from .polyfamily import RealPolynomial

SQRT5 = math.sqrt(5.0)
A2_VERTEX = 2.0 * math.sqrt(2.0) / 3.0
T_STAR = 0.5 * (1.0 - 1.0 / SQRT5)
BOUNDARY_SLACK = 1e-8
DISAGREEMENT_TOL = 1e-8


@dataclass(frozen=True)
class CubicPoint:
    a2: float
    a3: float

    def __post_init__(self):
        if not (math.isfinite(self.a2) and math.isfinite(self.a3)):
            raise ValueError(f"cubic coefficients must be finite, got ({self.a2!r}, {self.a3!r})")

    def polynomial(self):
        return RealPolynomial([1.0, self.a2, self.a3])

    def to_dict(self):
        return {"a2": self.a2, "a3": self.a3}

    @classmethod
    def from_dict(cls, d):
        return cls(d["a2"], d["a3"])


class TypeTag(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class GammaSegment(Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G1R = "G1R"
    G2R = "G2R"
    G3R = "G3R"

    @property
    def reflected(self):
        return self.value.endswith("R")

    @property
    def base(self):
        return GammaSegment(self.value[:2])

    @property
    def param_range(self):
        return {
            GammaSegment.G1: (0.0, 0.8),
            GammaSegment.G2: (0.2, 1.0 / 3.0),
            GammaSegment.G3: (0.0, A2_VERTEX),
        }[self.base]


def _as_point(q):
    if isinstance(q, CubicPoint):
        return q
    a2, a3 = q
    return CubicPoint(float(a2), float(a3))


def in_univalence_region(q):
    """Whether ``z + a2 z^2 + a3 z^3`` is univalent in the unit disk.

    For ``b = |a2|`` the vertical section of ``V`` is
    ``[(2b - 1)/3, 1/3]`` when ``b <= 4/5`` and
    ``[(1 - sqrt(1 - b^2))/2, 1/3]`` when ``4/5 < b <= 2 sqrt(2)/3``; the
    arc lies above the line ``G1`` there, touching it at ``b = 4/5``.
    Points within ``BOUNDARY_SLACK`` (Euclidean) of a boundary piece count
    as on it.
    """
    q = _as_point(q)
    b, a3 = abs(q.a2), q.a3
    eps = BOUNDARY_SLACK
    if a3 - 1.0 / 3.0 > eps:
        return False
    if (2.0 * b - 3.0 * a3 - 1.0) / math.sqrt(13.0) > eps:
        return False
    if b <= 0.8:
        return True
    g = b * b - 4.0 * a3 * (1.0 - a3)
    return g <= eps * math.hypot(2.0 * b, 8.0 * a3 - 4.0)


def critical_x0(q):
    q = _as_point(q)
    if q.a3 == 0.0:
        raise ValueError("a3 = 0: Phi is affine and has no critical point")
    return -q.a2 * (1.0 + q.a3) / (4.0 * q.a3)


def phi_quadratic(q, x):
    """``Phi(x) = |p(x + iy)|^2`` for ``x^2 + y^2 = 1``, extended to all real ``x``."""
    q = _as_point(q)
    a2, a3 = q.a2, q.a3
    return 1.0 + a2 * a2 + a3 * a3 - 2.0 * a3 + 2.0 * a2 * (1.0 + a3) * x + 4.0 * a3 * x * x


def classify_type(q):
    """Type II exactly when ``a3 > 0`` and ``-1 < x0 < 1``."""
    q = _as_point(q)
    if q.a3 <= 0.0:
        return TypeTag.TYPE_I
    x0 = critical_x0(q)
    return TypeTag.TYPE_II if -1.0 < x0 < 1.0 else TypeTag.TYPE_I


def min_modulus_closed_form(q):
    q = _as_point(q)
    a2, a3 = q.a2, q.a3
    if classify_type(q) is TypeTag.TYPE_II:
        return abs(1.0 - a3) * math.sqrt(max(0.0, 1.0 - a2 * a2 / (4.0 * a3)))
    return min(abs(1.0 - a2 + a3), abs(1.0 + a2 + a3))


def _closed_form_vec(a2, a3):
    with np.errstate(divide="ignore", invalid="ignore"):
        x0 = -a2 * (1.0 + a3) / (4.0 * a3)
        type2 = (a3 > 0.0) & (x0 > -1.0) & (x0 < 1.0)
        m2 = np.abs(1.0 - a3) * np.sqrt(np.maximum(0.0, 1.0 - a2 * a2 / (4.0 * a3)))
    m1 = np.minimum(np.abs(1.0 - a2 + a3), np.abs(1.0 + a2 + a3))
    return np.where(type2, m2, m1), type2


def _gamma_xy(seg, s):
    s = np.asarray(s, dtype=float)
    base = seg.base
    if base is GammaSegment.G1:
        a2, a3 = s, (2.0 * s - 1.0) / 3.0
    elif base is GammaSegment.G2:
        a2, a3 = 2.0 * np.sqrt(s * (1.0 - s)), s
    else:
        a2, a3 = s, np.full_like(s, 1.0 / 3.0)
    if seg.reflected:
        a2 = -a2
    return a2, a3


def gamma_point(seg, s):
    seg = GammaSegment(seg)
    lo, hi = seg.param_range
    if not lo <= s <= hi:
        raise ValueError(f"parameter {s!r} outside {seg.value} range [{lo}, {hi}]")
    a2, a3 = _gamma_xy(seg, s)
    return CubicPoint(float(a2), float(a3))


def phi_g2(t):
    """``m`` on the Type I part of ``G2``: ``|p(-1)| = 1 - 2 sqrt(t(1-t)) + t``."""
    return 1.0 - 2.0 * np.sqrt(t * (1.0 - t)) + t


def psi_g2(t):
    """``m`` on the Type II part of ``G2``: ``sqrt(t) (1 - t)``."""
    return np.sqrt(t) * (1.0 - t)


def tilde_a3():
    """Positive root of ``t^3 + t^2 + 3t - 1``, the Type I/II switch on ``G2``."""
    lo, hi = 0.2, 1.0 / 3.0
    f = lambda t: ((t + 1.0) * t + 3.0) * t - 1.0
    flo = f(lo)
    while hi - lo > 1e-15:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gamma_infimum(seg):
    """Closed-form infimum of ``m`` over a boundary piece and its unique minimizer."""
    seg = GammaSegment(seg)
    base = seg.base
    if base is GammaSegment.G1:
        value, a2, a3 = (2.0 - 0.8) / 3.0, 0.8, 0.2
    elif base is GammaSegment.G2:
        # phi bottoms out at t* inside J_I; psi increases on J_II
        value, a2, a3 = float(phi_g2(T_STAR)), 2.0 / SQRT5, T_STAR
    else:
        value, a2, a3 = math.sqrt(4.0 - 3.0 * A2_VERTEX ** 2) / 3.0, A2_VERTEX, 1.0 / 3.0
    if seg.reflected:
        a2 = -a2
    return value, CubicPoint(a2, a3)


@dataclass(frozen=True)
class ScanEntry:
    point: CubicPoint
    m: float
    segment: GammaSegment
    type_tag: TypeTag
    m_numeric: float

    def to_dict(self):
        return {
            "a2": self.point.a2,
            "a3": self.point.a3,
            "m": self.m,
            "segment": self.segment.value,
            "type": self.type_tag.value,
            "m_numeric": self.m_numeric,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(CubicPoint(d["a2"], d["a3"]), d["m"], GammaSegment(d["segment"]),
                   TypeTag(d["type"]), d["m_numeric"])


@dataclass
class ExtremalScan:
    entries: list
    warnings: list = field(default_factory=list)

    @property
    def best(self):
        return self.entries[0]


def _refine_on_segment(seg, s0, step):
    """Golden-section polish of the closed-form ``m`` along one piece near ``s0``."""
    lo_r, hi_r = seg.param_range
    a, b = max(lo_r, s0 - step), min(hi_r, s0 + step)
    m = lambda s: float(_closed_form_vec(*_gamma_xy(seg, np.array([s])))[0][0])
    c, d = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
    fc, fd = m(c), m(d)
    for _ in range(80):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = m(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = m(d)
    cands = [a, b, 0.5 * (a + b), s0]
    return min(cands, key=m)


def extremal_scan(resolution=10_000, grid_size=None):
    """Sweep ``m`` over all six boundary pieces, cross-checking closed form against numerics.

    Every piece is sampled at ``resolution`` parameter values and the best
    sample on each piece is polished by golden section. Entries come back
    sorted by ``m`` ascending; mirror images tie and the ``a2 > 0`` one comes
    first.
    """
    if int(resolution) != resolution or resolution < 100:
        raise ValueError(f"resolution must be an integer >= 100, got {resolution!r}")
    resolution = int(resolution)
    segs, a2s, a3s = [], [], []
    for seg in GammaSegment:
        lo, hi = seg.param_range
        s = np.linspace(lo, hi, resolution)
        s_best = s[np.argmin(_closed_form_vec(*_gamma_xy(seg, s))[0])]
        s = np.append(s, _refine_on_segment(seg, s_best, (hi - lo) / (resolution - 1)))
        a2, a3 = _gamma_xy(seg, s)
        segs += [seg] * s.size
        a2s.append(a2)
        a3s.append(a3)
    a2 = np.concatenate(a2s)
    a3 = np.concatenate(a3s)
    m, type2 = _closed_form_vec(a2, a3)
    C = np.column_stack((np.ones_like(a2), a2, a3))
    m_num, _ = min_modulus_rows(C, grid_size)

    warnings = []
    bad = np.flatnonzero(np.abs(m - m_num) > DISAGREEMENT_TOL)
    for i in bad:
        warnings.append({
            "kind": "closed_form_disagreement",
            "a2": float(a2[i]), "a3": float(a3[i]),
            "closed_form": float(m[i]), "numeric": float(m_num[i]),
        })

    order = np.lexsort((-a2, m))
    entries = [
        ScanEntry(CubicPoint(float(a2[i]), float(a3[i])), float(m[i]), segs[i],
                  TypeTag.TYPE_II if type2[i] else TypeTag.TYPE_I, float(m_num[i]))
        for i in order
    ]
    return ExtremalScan(entries, warnings)


def boundary_polyline(samples_per_piece=1000):
    """Closed polyline through ``Gamma``, counter-clockwise, for plotting and containment tests."""
    parts = []
    order = [
        (GammaSegment.G1, False), (GammaSegment.G2, False), (GammaSegment.G3, False),
        (GammaSegment.G3R, True), (GammaSegment.G2R, True), (GammaSegment.G1R, True),
    ]
    for seg, backwards in order:
        lo, hi = seg.param_range
        s = np.linspace(lo, hi, samples_per_piece)
        if seg.base is GammaSegment.G3:
            backwards = not backwards
        if backwards:
            s = s[::-1]
        a2, a3 = _gamma_xy(seg, s)
        parts.append(np.column_stack((a2, a3))[:-1])
    return np.vstack(parts)


def _point_segment_distance(px, py, ax, ay, bx, by):
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    t = np.clip(((px - ax) * dx + (py - ay) * dy) / np.where(L2 > 0, L2, 1.0), 0.0, 1.0)
    return np.hypot(px - (ax + t * dx), py - (ay + t * dy))


def boundary_distance(q):
    """Euclidean distance from ``q`` to ``Gamma``."""
    q = _as_point(q)
    best = math.inf
    for seg in GammaSegment:
        lo, hi = seg.param_range
        if seg.base is GammaSegment.G2:
            # arc: dense polyline, then a local golden search on the exact curve
            s = np.linspace(lo, hi, 2001)
            a2, a3 = _gamma_xy(seg, s)
            d = np.hypot(a2 - q.a2, a3 - q.a3)
            i = int(np.argmin(d))
            a, b = s[max(i - 1, 0)], s[min(i + 1, s.size - 1)]
            dist = lambda t: float(np.hypot(*(np.array(_gamma_xy(seg, t)) - [q.a2, q.a3])))
            for _ in range(100):
                c, e = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
                if dist(c) < dist(e):
                    b = e
                else:
                    a = c
            best = min(best, dist(0.5 * (a + b)), float(d.min()))
        else:
            (ax, bx), (ay, by) = (_gamma_xy(seg, np.array([lo, hi])))
            best = min(best, float(_point_segment_distance(q.a2, q.a3, ax, ay, bx, by)))
    return best
