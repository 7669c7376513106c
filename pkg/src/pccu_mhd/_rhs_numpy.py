"""Vectorized (numpy) evaluation of the semi-discrete PCCU right-hand side.

This is the fallback backend; the compiled kernels in ``_kernels.pyx``
implement the same sweep with the same per-component formulas.  The
pipeline for one evaluation:

    ghosts -> primitives W -> minmod slopes (divergence-carrying magnetic
    slopes replaced by sigma-scaled cell averages) -> face values and face
    energies -> one-sided speeds -> CU fluxes -> nonconservative interface
    and cell terms -> assembly.

All loops are expressed as whole-array slices; the result is bitwise
deterministic.  Returns the RHS on the padded layout (zero in ghosts) and
the CFL bound min(delta / max(s+, -s-)) over all interfaces.
"""

from __future__ import annotations

import numpy as np

from .errors import NumericsError
from .limiter import df_scaling_array, gm_slope_array

#: Degenerate-fan guard: below this speed fan width the CU flux reduces to
#: the central average and the one-sided weights to (1/2, -1/2).
EPS_SPEED = 1e-12


def _cu_flux_and_weights(fl, fr, ul, ur, sp, sm):
    eps = EPS_SPEED * np.maximum(1.0, np.maximum(np.abs(sp), np.abs(sm)))
    degen = (sp - sm) < eps
    den = np.where(degen, 1.0, sp - sm)
    flux = np.where(
        degen,
        0.5 * (fl + fr),
        (sp * fl - sm * fr) / den + (sp * sm / den) * (ur - ul),
    )
    w_plus = np.where(degen, 0.5, sp / den)
    w_minus = np.where(degen, -0.5, sm / den)
    return flux, w_plus, w_minus


def rhs_and_bound(q, model, grid, theta):
    """RHS of d/dt U on a ghost-filled padded field plus the speed bound."""
    ng, nx, ny = grid.ng, grid.nx, grid.ny
    dx, dy = grid.dx, grid.dy

    w = model.primitives_array(q)
    wx = gm_slope_array(w, axis=2, theta=theta, delta=dx)
    wy = gm_slope_array(w, axis=1, theta=theta, delta=dy)
    sigma = df_scaling_array(
        w[model.div_a], w[model.div_b], wx[model.mag_x], wy[model.mag_y]
    )
    wx[model.mag_x] = sigma * w[model.div_a]
    wy[model.mag_y] = sigma * w[model.div_b]

    w_e = w + (0.5 * dx) * wx
    w_w = w - (0.5 * dx) * wx
    w_n = w + (0.5 * dy) * wy
    w_s = w - (0.5 * dy) * wy

    rows = slice(ng, ng + ny)          # interior rows (x sweep)
    cols = slice(ng, ng + nx)          # interior cols (y sweep)
    xl = (slice(None), rows, slice(1, nx + 2))      # left cells of x-interfaces
    xr = (slice(None), rows, slice(2, nx + 3))      # right cells
    yl = (slice(None), slice(1, ny + 2), cols)      # lower cells of y-interfaces
    yr = (slice(None), slice(2, ny + 3), cols)      # upper cells

    # x sweep -------------------------------------------------------
    wl, wr = w_e[xl], w_w[xr]
    model.check_face_positivity(wl, "east faces")
    model.check_face_positivity(wr, "west faces")
    ul, ur = model.face_conserved(wl), model.face_conserved(wr)
    sp, sm = model.speeds_array(wl, wr, "x")
    tl, tr = wy[1][xl[1:]], wy[1][xr[1:]]           # u_y of the owning cells
    f_l = model.flux_array(wl, ul, "x", tl)
    f_r = model.flux_array(wr, ur, "x", tr)
    flux_x, wp_x, wm_x = _cu_flux_and_weights(f_l, f_r, ul, ur, sp, sm)
    qpsi_x = model.noncons_iface_array(wl, wr, "x")
    amax_x = np.maximum(sp, -sm)
    bound_x = float(np.min(np.where(amax_x > 0.0, dx / np.where(amax_x > 0.0, amax_x, 1.0), np.inf)))

    # y sweep -------------------------------------------------------
    wl, wr = w_n[yl], w_s[yr]
    model.check_face_positivity(wl, "north faces")
    model.check_face_positivity(wr, "south faces")
    ul, ur = model.face_conserved(wl), model.face_conserved(wr)
    sp, sm = model.speeds_array(wl, wr, "y")
    tl, tr = wx[2][yl[1:]], wx[2][yr[1:]]           # v_x of the owning cells
    f_l = model.flux_array(wl, ul, "y", tl)
    f_r = model.flux_array(wr, ur, "y", tr)
    flux_y, wp_y, wm_y = _cu_flux_and_weights(f_l, f_r, ul, ur, sp, sm)
    rpsi_y = model.noncons_iface_array(wl, wr, "y")
    amax_y = np.maximum(sp, -sm)
    bound_y = float(np.min(np.where(amax_y > 0.0, dy / np.where(amax_y > 0.0, amax_y, 1.0), np.inf)))

    # cell terms ----------------------------------------------------
    ii = (slice(None), rows, cols)
    q_cell = model.noncons_cell_array(w[ii], wx[ii], wy[ii], sigma[rows, cols], dx, dy, "x")
    r_cell = model.noncons_cell_array(w[ii], wx[ii], wy[ii], sigma[rows, cols], dx, dy, "y")

    # assembly ------------------------------------------------------
    bx = (
        flux_x[:, :, 1:]
        - flux_x[:, :, :-1]
        - wp_x[None, :, :-1] * qpsi_x[:, :, :-1]
        + wm_x[None, :, 1:] * qpsi_x[:, :, 1:]
    )
    by = (
        flux_y[:, 1:, :]
        - flux_y[:, :-1, :]
        - wp_y[None, :-1, :] * rpsi_y[:, :-1, :]
        + wm_y[None, 1:, :] * rpsi_y[:, 1:, :]
    )
    rhs_int = -(bx - q_cell) / dx - (by - r_cell) / dy

    if np.isnan(rhs_int).any():
        comp, k, j = [int(v[0]) for v in np.nonzero(np.isnan(rhs_int))]
        raise NumericsError(f"NaN in RHS component {comp} at interior cell (j={j}, k={k})")

    rhs = np.zeros_like(q)
    rhs[:, rows, cols] = rhs_int
    return rhs, min(bound_x, bound_y)
