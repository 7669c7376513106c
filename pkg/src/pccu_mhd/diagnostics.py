"""Run-time verification: divergence residual, positivity, conservation, L1.

The log format is one line per sample,

    t, max_divAB, min_rho, min_p, total_mass

in decimal scientific notation with 17 significant digits (min_p is nan
for the shallow-water system, which has no gas pressure).
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError


def divergence_residual(state) -> float:
    """max over interior cells of |A + B| (the divergence-carrying pair)."""
    q = state.interior
    return float(np.max(np.abs(q[-2] + q[-1])))


def positivity_report(state, model):
    """Exact interior minima of (density|thickness, pressure); never mutates.

    Pressure is nan for the shallow-water system.  Negative values are
    reported, not raised; the solver's own checks handle aborts.
    """
    q = state.interior
    if model.kind == "ideal":
        rho = q[0]
        u, v, w = q[1] / rho, q[2] / rho, q[3] / rho
        pb = 0.5 * (q[4] ** 2 + q[5] ** 2 + q[6] ** 2)
        p = (model.gamma - 1.0) * (q[7] - 0.5 * rho * (u * u + v * v + w * w) - pb)
        return float(rho.min()), float(p.min())
    return float(q[0].min()), float("nan")


def total_mass(state) -> float:
    """Integral of the conserved leading component over the interior."""
    return float(state.interior[0].sum()) * state.grid.cell_area()


def restrict_2x2(fine: np.ndarray) -> np.ndarray:
    """Cell-average aggregation of 2x2 blocks (fine interior -> coarse interior)."""
    ny, nx = fine.shape
    if ny % 2 or nx % 2:
        raise ShapeError(f"cannot 2x2-restrict odd shape {fine.shape}")
    return 0.25 * (
        fine[0::2, 0::2] + fine[0::2, 1::2] + fine[1::2, 0::2] + fine[1::2, 1::2]
    )


def l1_difference(a: np.ndarray, b: np.ndarray, dx: float, dy: float) -> float:
    """Discrete L1 norm of the difference of two same-grid interior fields."""
    if a.shape != b.shape:
        raise ShapeError(f"field shapes differ: {a.shape} vs {b.shape}")
    return float(np.sum(np.abs(a - b))) * dx * dy


class DiagnosticsLog:
    """Append-only sample log; optionally mirrored to a plain-text file."""

    HEADER = "# t, max_divAB, min_rho, min_p, total_mass"

    def __init__(self, model, path=None):
        self.model = model
        self.path = path
        self.samples = []
        if path is not None:
            with open(path, "w") as f:
                f.write(self.HEADER + "\n")

    def sample(self, t: float, state) -> None:
        div = divergence_residual(state)
        mn, mp = positivity_report(state, self.model)
        mass = total_mass(state)
        rec = (t, div, mn, mp, mass)
        self.samples.append(rec)
        if self.path is not None:
            with open(self.path, "a") as f:
                f.write(", ".join(format(v, ".16e") for v in rec) + "\n")

    @property
    def max_divergence(self) -> float:
        return max(s[1] for s in self.samples) if self.samples else 0.0

    @property
    def min_pressure(self) -> float:
        return min(s[3] for s in self.samples) if self.samples else float("nan")

    @property
    def min_density(self) -> float:
        return min(s[2] for s in self.samples) if self.samples else float("nan")
