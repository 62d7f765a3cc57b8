"""Reference computations that share no code with the package."""

import math

import numpy as np
from matplotlib.path import Path

R2 = 2 * math.sqrt(2) / 3


def gamma_polygon(vertices=100_000):
    """Closed polygon through G1, G2, G3 and their mirror images, counter-clockwise."""
    n = vertices // 6
    a = np.linspace(0.0, 0.8, n, endpoint=False)
    g1 = np.column_stack((a, (2 * a - 1) / 3))
    t = np.linspace(0.2, 1 / 3, n, endpoint=False)
    g2 = np.column_stack((2 * np.sqrt(t * (1 - t)), t))
    a = np.linspace(R2, 0.0, n, endpoint=False)
    g3 = np.column_stack((a, np.full(n, 1 / 3)))
    right = np.vstack((g1, g2, g3))
    left = (right[1:] * [-1, 1])[::-1]
    return np.vstack((right, [[0.0, 1 / 3]], left))


_PATH = None


def in_region(points):
    global _PATH
    if _PATH is None:
        _PATH = Path(gamma_polygon())
    return _PATH.contains_points(np.atleast_2d(points))


def sample_region(rng, count):
    """Uniform samples from the cubic univalence region by rejection."""
    out = []
    while sum(len(o) for o in out) < count:
        cand = np.column_stack((rng.uniform(-R2, R2, 4 * count), rng.uniform(-1 / 3, 1 / 3, 4 * count)))
        out.append(cand[in_region(cand)])
    return np.vstack(out)[:count]


def dense_min_modulus(coeffs, samples=1 << 16):
    """Grid minimum of |p| and its angle, no refinement."""
    theta = 2 * np.pi * np.arange(samples) / samples
    z = np.exp(1j * theta)
    vals = np.abs(np.polynomial.polynomial.polyval(z, np.concatenate(([0.0], coeffs))))
    k = int(np.argmin(vals))
    return float(vals[k]), float(theta[k])


def dense_mu(coeffs, samples=1 << 18):
    """Min of Re p over sign changes of Im p on a dense grid, plus theta = 0, pi."""
    theta = np.linspace(0, np.pi, samples + 1)
    w = np.polynomial.polynomial.polyval(np.exp(1j * theta), np.concatenate(([0.0], coeffs)))
    im = w.imag
    flips = np.flatnonzero(im[1:-2] * im[2:-1] < 0) + 1
    # linear interpolation of Re across the flip
    s = im[flips] / (im[flips] - im[flips + 1])
    re = w.real[flips] * (1 - s) + w.real[flips + 1] * s
    return float(min(np.min(re, initial=np.inf), w.real[0], w.real[-1]))
