"""Minmod algebra and the divergence-free slope scaling.

Scalar entry points (`minmod`, `gm_slope`, `df_scaling`, `interface_values`)
define the reconstruction; the ``*_array`` variants apply the same formulas
to whole padded fields and are what the numpy backend uses.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError

#: Default generalized-minmod parameter.
THETA_DEFAULT = 1.3

#: Relative floor below which a cell-average magnetic derivative is treated
#: as zero in the scaling-factor ratio (the ratio branch is 0/0-meaningless
#: there and the scaled slope vanishes regardless).
EPS_DIV = 1e-14


def minmod(args) -> float:
    """Return the smallest-magnitude argument if all share a strict sign, else 0."""
    vals = list(args)
    if not vals:
        raise ConfigurationError("minmod needs at least one argument")
    if all(a > 0.0 for a in vals):
        return min(vals)
    if all(a < 0.0 for a in vals):
        return max(vals)
    return 0.0


def gm_slope(w_prev: float, w_c: float, w_next: float, theta: float, delta: float) -> float:
    """Generalized minmod slope of three consecutive cell values spaced delta apart."""
    return minmod(
        (
            theta * (w_c - w_prev) / delta,
            (w_next - w_prev) / (2.0 * delta),
            theta * (w_next - w_c) / delta,
        )
    )


def df_scaling(a_bar: float, b_bar: float, hat_ax: float, hat_by: float) -> float:
    """Scaling factor keeping the divergence-carrying slopes non-oscillatory.

    sigma^x = min(1, hat_ax / a_bar) when the auxiliary minmod slope and the
    cell average agree in sign, 0 otherwise; sigma^y analogous; the result
    is min(1, sigma^x, sigma^y).  A component whose cell average is below
    the EPS_DIV floor contributes 1 (its scaled slope is ~0 either way).
    """
    floor = EPS_DIV * max(1.0, abs(a_bar), abs(b_bar), abs(hat_ax), abs(hat_by))
    if abs(a_bar) <= floor:
        sx = 1.0
    elif hat_ax * a_bar > 0.0:
        sx = min(1.0, hat_ax / a_bar)
    else:
        sx = 0.0
    if abs(b_bar) <= floor:
        sy = 1.0
    elif hat_by * b_bar > 0.0:
        sy = min(1.0, hat_by / b_bar)
    else:
        sy = 0.0
    return min(1.0, sx, sy)


def interface_values(w_c: float, sx: float, sy: float, dx: float, dy: float):
    """Point values of the in-cell linear reconstruction at the four face midpoints.

    Returns (E, W, N, S).
    """
    ex = sx * (dx / 2.0)
    ey = sy * (dy / 2.0)
    return w_c + ex, w_c - ex, w_c + ey, w_c - ey


# ------------------------------------------------------------------
# vectorized forms used by the numpy backend
# ------------------------------------------------------------------

def minmod3_array(a, b, c):
    """Elementwise minmod of three arrays."""
    pos = np.minimum(np.minimum(a, b), c)
    neg = np.maximum(np.maximum(a, b), c)
    out = np.where((a > 0) & (b > 0) & (c > 0), pos, 0.0)
    return np.where((a < 0) & (b < 0) & (c < 0), neg, out)


def gm_slope_array(w: np.ndarray, axis: int, theta: float, delta: float) -> np.ndarray:
    """Generalized minmod slopes along one axis of a padded field.

    Entries without both neighbors along ``axis`` are left at 0; callers
    only read the once-shrunk region.
    """
    out = np.zeros_like(w)
    prev = np.roll(w, 1, axis=axis)
    nxt = np.roll(w, -1, axis=axis)
    s = minmod3_array(
        theta * (w - prev) / delta,
        (nxt - prev) / (2.0 * delta),
        theta * (nxt - w) / delta,
    )
    sl = [slice(None)] * w.ndim
    sl[axis] = slice(1, -1)
    out[tuple(sl)] = s[tuple(sl)]
    return out


def df_scaling_array(a_bar, b_bar, hat_ax, hat_by):
    """Vectorized df_scaling over cell arrays."""
    floor = EPS_DIV * np.maximum.reduce(
        [np.ones_like(a_bar), np.abs(a_bar), np.abs(b_bar), np.abs(hat_ax), np.abs(hat_by)]
    )
    a_safe = np.where(np.abs(a_bar) <= floor, 1.0, a_bar)
    sx = np.where(
        np.abs(a_bar) <= floor,
        1.0,
        np.where(hat_ax * a_bar > 0.0, np.minimum(1.0, hat_ax / a_safe), 0.0),
    )
    b_safe = np.where(np.abs(b_bar) <= floor, 1.0, b_bar)
    sy = np.where(
        np.abs(b_bar) <= floor,
        1.0,
        np.where(hat_by * b_bar > 0.0, np.minimum(1.0, hat_by / b_safe), 0.0),
    )
    return np.minimum(1.0, np.minimum(sx, sy))
