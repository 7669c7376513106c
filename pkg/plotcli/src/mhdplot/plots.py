"""Contour and line-cut rendering, matching the solver paper-trail plots:
equally spaced contour levels over the data range, and multi-resolution cut
overlays with markers for the coarse series and lines for the fine ones."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .derived import compute
from .errors import UsageError
from .snapshots import Snapshot, read_cut


def contour_plot(snap: Snapshot, component: str, levels: int, out_path) -> None:
    """Filled contours with ``levels`` equally spaced levels over [min, max]."""
    field = compute(snap, component)
    lo, hi = float(field.min()), float(field.max())
    fig, ax = plt.subplots(figsize=(5.4, 4.6))
    if hi - lo <= 1e-300 * max(1.0, abs(hi)):
        ax.pcolormesh(snap.x, snap.y, field, shading="nearest")
    else:
        ax.contourf(snap.x, snap.y, field, levels=np.linspace(lo, hi, levels + 1))
        ax.contour(snap.x, snap.y, field, levels=np.linspace(lo, hi, levels + 1),
                   colors="k", linewidths=0.3)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    ax.set_title(f"{snap.problem}: {component} at t={snap.time:g}  [{lo:.3g}, {hi:.3g}]")
    fig.tight_layout()
    fig.savefig(out_path, dpi=130)
    plt.close(fig)


def line_plot(cut_paths, component: str, out_path) -> None:
    """Overlay one component from several cut files; the coarsest series is
    drawn with markers, finer ones as solid lines."""
    if not cut_paths:
        raise UsageError("no cut files given")
    series = []
    for path in cut_paths:
        abscissa, names, data = read_cut(path)
        if component not in names:
            raise UsageError(
                f"{path}: no column {component!r}; available: {', '.join(names)}"
            )
        col = names.index(component) + 1
        series.append((abscissa, data[:, 0], data[:, col], path))
    if len({s[0] for s in series}) != 1:
        raise UsageError("cut files mix x- and y-direction cuts")
    series.sort(key=lambda s: len(s[1]))
    fig, ax = plt.subplots(figsize=(5.4, 4.2))
    for rank, (abscissa, xs, ys, path) in enumerate(series):
        label = f"{len(xs)} cells"
        if rank == 0 and len(series) > 1:
            ax.plot(xs, ys, "o", color="red", markersize=2.5, label=label)
        else:
            ax.plot(xs, ys, "-", color="black", linewidth=1.0, label=label)
    ax.set_xlabel(series[0][0])
    ax.set_ylabel(component)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=130)
    plt.close(fig)
