"""Self-intersection test for closed polygons.

Segments are bucketed on a uniform grid (boxes padded so every pair closer
than the pad shares a bucket); candidate pairs are tested with orientation
predicates, falling back to exact rational arithmetic when the float
result is too close to zero to trust.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

EPS = np.finfo(float).eps


@dataclass
class SweepResult:
    crossing: tuple = None      # (i, j, s, u): segment indices and their crossing parameters
    ambiguous: bool = False     # some pair came within the proximity band without a clean crossing
    margin: float = np.inf      # lower bound on the distance between non-adjacent edges


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _orient_exact(a, b, c):
    ax, ay, bx, by, cx, cy = (Fraction(float(v)) for v in (a.real, a.imag, b.real, b.imag, c.real, c.imag))
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def _candidate_pairs(x0, y0, x1, y1, pad):
    n = x0.size
    lo_x = np.minimum(x0, x1) - pad
    hi_x = np.maximum(x0, x1) + pad
    lo_y = np.minimum(y0, y1) - pad
    hi_y = np.maximum(y0, y1) + pad
    lengths = np.hypot(x1 - x0, y1 - y0)
    cell = max(float(np.median(lengths)) + 2.0 * pad, 1e-300)
    ox, oy = lo_x.min(), lo_y.min()
    ix0 = np.floor((lo_x - ox) / cell).astype(np.int64)
    ix1 = np.floor((hi_x - ox) / cell).astype(np.int64)
    iy0 = np.floor((lo_y - oy) / cell).astype(np.int64)
    iy1 = np.floor((hi_y - oy) / cell).astype(np.int64)
    wx = ix1 - ix0 + 1
    wy = iy1 - iy0 + 1
    count = wx * wy
    seg = np.repeat(np.arange(n), count)
    # position of each expanded record within its segment's box
    start = np.repeat(np.cumsum(count) - count, count)
    local = np.arange(seg.size) - start
    cx = ix0[seg] + local % wx[seg]
    cy = iy0[seg] + local // wx[seg]
    key = cx * (int(iy1.max()) + 2) + cy
    order = np.argsort(key, kind="stable")
    key, seg = key[order], seg[order]
    bounds = np.flatnonzero(np.diff(key)) + 1
    starts = np.concatenate(([0], bounds))
    sizes = np.diff(np.concatenate((starts, [key.size])))
    pairs = []
    for g in np.unique(sizes):
        if g < 2:
            continue
        groups = starts[sizes == g][:, None] + np.arange(g)
        members = seg[groups]
        r, c = np.triu_indices(g, 1)
        pairs.append(np.column_stack((members[:, r].ravel(), members[:, c].ravel())))
    if not pairs:
        return np.empty((0, 2), dtype=np.int64)
    P = np.vstack(pairs)
    lo, hi = np.minimum(P[:, 0], P[:, 1]), np.maximum(P[:, 0], P[:, 1])
    keys = np.unique(lo * n + hi)
    lo, hi = keys // n, keys % n
    gap = hi - lo
    keep = (gap != 0) & (gap != 1) & (gap != n - 1)
    return np.column_stack((lo[keep], hi[keep]))


def _segment_distance(ax, ay, bx, by, cx, cy, dx, dy):
    def point_seg(px, py, qx, qy, rx, ry):
        vx, vy = rx - qx, ry - qy
        L2 = vx * vx + vy * vy
        t = np.clip(((px - qx) * vx + (py - qy) * vy) / np.where(L2 > 0, L2, 1.0), 0.0, 1.0)
        return np.hypot(px - qx - t * vx, py - qy - t * vy)

    return np.minimum.reduce([
        point_seg(ax, ay, cx, cy, dx, dy),
        point_seg(bx, by, cx, cy, dx, dy),
        point_seg(cx, cy, ax, ay, bx, by),
        point_seg(dx, dy, ax, ay, bx, by),
    ])


def find_self_intersection(points, band=1e-10):
    """Look for a crossing between non-adjacent edges of the closed polygon ``points``.

    Returns a :class:`SweepResult`. A pair whose separation falls inside
    ``band`` without a certified proper crossing marks the result ambiguous.
    Adjacent edges that fold back onto each other are ambiguous as well.
    """
    pts = np.asarray(points, dtype=complex)
    n = pts.size
    a = pts
    b = np.roll(pts, -1)
    ax, ay, bx, by = a.real, a.imag, b.real, b.imag
    result = SweepResult()

    # adjacent edges i, i+1 meet at b[i]; a reversal there overlaps them
    ex, ey = bx - ax, by - ay
    fx, fy = np.roll(ex, -1), np.roll(ey, -1)
    cross = ex * fy - ey * fx
    dot = ex * fx + ey * fy
    scale = np.hypot(ex, ey) * np.hypot(fx, fy)
    if np.any((np.abs(cross) <= 8 * EPS * scale) & (dot < 0)):
        result.ambiguous = True

    # padding by half a typical edge makes the margin a certified lower bound:
    # pairs that never share a bucket are more than 2*pad apart
    pad = max(band, 0.5 * float(np.median(np.hypot(ex, ey))))
    P = _candidate_pairs(ax, ay, bx, by, pad)
    result.margin = 2.0 * pad
    if P.size == 0:
        return result
    i, j = P[:, 0], P[:, 1]
    d1 = _orient(ax[i], ay[i], bx[i], by[i], ax[j], ay[j])
    d2 = _orient(ax[i], ay[i], bx[i], by[i], bx[j], by[j])
    d3 = _orient(ax[j], ay[j], bx[j], by[j], ax[i], ay[i])
    d4 = _orient(ax[j], ay[j], bx[j], by[j], bx[i], by[i])
    mag = np.maximum.reduce([np.abs(ax[i]), np.abs(ay[i]), np.abs(bx[i]), np.abs(by[i]),
                             np.abs(ax[j]), np.abs(ay[j]), np.abs(bx[j]), np.abs(by[j])])
    # coordinate differences carry ~eps*mag error; the products scale it by the spans
    span = (np.abs(ex[i]) + np.abs(ey[i]) + np.abs(ex[j]) + np.abs(ey[j])
            + np.abs(ax[j] - ax[i]) + np.abs(ay[j] - ay[i]))
    err = 8 * EPS * mag * span + 1e-300
    shaky = (np.abs(d1) <= err) | (np.abs(d2) <= err) | (np.abs(d3) <= err) | (np.abs(d4) <= err)
    s1, s2, s3, s4 = np.sign(d1), np.sign(d2), np.sign(d3), np.sign(d4)
    for k in np.flatnonzero(shaky):
        ii, jj = i[k], j[k]
        s1[k] = _orient_exact(a[ii], b[ii], a[jj])
        s2[k] = _orient_exact(a[ii], b[ii], b[jj])
        s3[k] = _orient_exact(a[jj], b[jj], a[ii])
        s4[k] = _orient_exact(a[jj], b[jj], b[ii])
    proper = (s1 * s2 < 0) & (s3 * s4 < 0)

    dist = _segment_distance(ax[i], ay[i], bx[i], by[i], ax[j], ay[j], bx[j], by[j])
    result.margin = min(result.margin, float(dist.min()))
    hits = np.flatnonzero(proper)
    if hits.size:
        k = hits[0]
        ii, jj = int(i[k]), int(j[k])
        # crossing parameters along each edge
        denom = (bx[ii] - ax[ii]) * (by[jj] - ay[jj]) - (by[ii] - ay[ii]) * (bx[jj] - ax[jj])
        s = ((ax[jj] - ax[ii]) * (by[jj] - ay[jj]) - (ay[jj] - ay[ii]) * (bx[jj] - ax[jj])) / denom
        u = ((ax[jj] - ax[ii]) * (by[ii] - ay[ii]) - (ay[jj] - ay[ii]) * (bx[ii] - ax[ii])) / denom
        result.crossing = (ii, jj, float(s), float(u))
        return result
    if np.any(dist <= band):
        result.ambiguous = True
    return result
