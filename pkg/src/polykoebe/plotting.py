"""Figure output for the CLI report paths.

All functions write a file and close their figure; nothing is shown
interactively.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .cubic import A2_VERTEX, T_STAR, boundary_polyline  # noqa: E402


def _figure(width=6.0, height=None):
    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    if not height:
        height = width * golden_ratio
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.tick_params(labelsize=9)
    return fig, ax


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_boundary_curve(points, path, min_modulus=None, title=None):
    """Image of the unit circle, with the disk of radius ``min_modulus`` shaded."""
    pts = np.asarray(points, dtype=complex)
    fig, ax = _figure(5.0, 5.0)
    closed = np.append(pts, pts[:1])
    ax.plot(closed.real, closed.imag, lw=1.0, color="C0")
    ax.plot([0], [0], "k+", ms=8)
    if min_modulus is not None:
        ax.add_patch(plt.Circle((0, 0), min_modulus, color="C1", alpha=0.25, lw=0))
        ax.add_patch(plt.Circle((0, 0), 0.25, fill=False, ls="--", lw=0.8, color="0.4"))
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title, fontsize=10)
    _save(fig, path)


def plot_cubic_scan(entries, path):
    """The region boundary coloured by ``m``, with ``p_3``, ``p_3*`` and ``q_3`` marked."""
    fig, ax = _figure(6.5)
    poly = boundary_polyline(400)
    ax.fill(poly[:, 0], poly[:, 1], color="0.93", lw=0)
    a2 = np.array([e.point.a2 for e in entries])
    a3 = np.array([e.point.a3 for e in entries])
    m = np.array([e.m for e in entries])
    sc = ax.scatter(a2, a3, c=m, s=2, cmap="viridis", lw=0)
    cb = fig.colorbar(sc, ax=ax)
    cb.set_label("m(p)")
    for sign in (1, -1):
        ax.plot(sign * 2 / math.sqrt(5), T_STAR, "r*", ms=10)
        ax.plot(sign * A2_VERTEX, 1 / 3, "kx", ms=7)
    ax.set_xlabel("$a_2$")
    ax.set_ylabel("$a_3$")
    _save(fig, path)


def plot_radius_table(rows, path):
    fig, ax = _figure(6.5)
    N = [r["N"] for r in rows]
    ax.plot(N, [r["rho"] for r in rows], "o-", ms=3, label="conjectured radius")
    ax.plot(N, [r["m_pn"] for r in rows], "s", ms=3, mfc="none", label="numeric m($p_N$)")
    ax.plot(N, [-r["qn_minus_one"] for r in rows], "^-", ms=3, lw=0.8, label="$|q_N(-1)|$")
    ax.axhline(0.25, color="0.4", ls="--", lw=0.8)
    ax.set_xlabel("N")
    ax.set_ylabel("radius")
    ax.legend(fontsize=8, frameon=False)
    _save(fig, path)
