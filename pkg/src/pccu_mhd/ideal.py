"""Augmented Godunov-Powell ideal MHD: EOS, fluxes, speeds, nonconservative terms.

Conserved vector (index order used for every 10-vector in the package):

    0 rho   1 rho*u   2 rho*v   3 rho*w   4 b1   5 b2   6 b3   7 E   8 A   9 B

where A and B carry the x-derivative of b1 and the y-derivative of b2, so
A + B = 0 encodes the in-cell divergence-free constraint.  Reconstruction
variables W replace momenta and energy with (u, v, w, p):

    0 rho   1 u   2 v   3 w   4 b1   5 b2   6 b3   7 p   8 A   9 B

Scalar functions below are the reference definitions; the vectorized
methods on :class:`IdealMHD` apply the same formulas to whole fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, PositivityError

NCOMP = 10

# conserved indices
RHO, MX, MY, MZ, B1, B2, B3, EN, IA, IB = range(10)
# primitive (reconstruction) indices
U, V, W, PR = 1, 2, 3, 7

CONS_NAMES = ("rho", "mx", "my", "mz", "b1", "b2", "b3", "E", "A", "B")


@dataclass(frozen=True)
class GasParams:
    """Ideal-gas closure parameter."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ConfigurationError(f"gamma must exceed 1, got {self.gamma}")


def total_energy(prim, gamma: float) -> float:
    """EOS: E = p/(gamma-1) + rho |u|^2 / 2 + |b|^2 / 2 for a W-ordered state."""
    rho, u, v, w, b1, b2, b3, p = prim[:8]
    return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v + w * w) + 0.5 * (
        b1 * b1 + b2 * b2 + b3 * b3
    )


def primitives_from_averages(cons, gamma: float):
    """Invert the EOS on one conserved 10-vector; raises on nonpositive rho or p."""
    rho = cons[RHO]
    if not rho > 0.0:
        raise PositivityError("density", rho)
    u, v, w = cons[MX] / rho, cons[MY] / rho, cons[MZ] / rho
    b1, b2, b3 = cons[B1], cons[B2], cons[B3]
    p = (gamma - 1.0) * (
        cons[EN]
        - 0.5 * rho * (u * u + v * v + w * w)
        - 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    )
    if not p > 0.0:
        raise PositivityError("pressure", p)
    return np.array([rho, u, v, w, b1, b2, b3, p, cons[IA], cons[IB]])


def flux(prim, energy: float, axis: str, tangential_slope: float) -> np.ndarray:
    """Physical flux F (axis='x') or G (axis='y') of the augmented system.

    ``tangential_slope`` is the point value u_y for axis='x' and v_x for
    axis='y' (first-order approximation by the owning cell's slope).
    """
    rho, u, v, w, b1, b2, b3, p, a, b = prim
    pb = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    udotb = u * b1 + v * b2 + w * b3
    out = np.empty(NCOMP)
    if axis == "x":
        t = b2 * tangential_slope
        out[0] = rho * u
        out[1] = rho * u * u + p + pb - b1 * b1
        out[2] = rho * u * v - b1 * b2
        out[3] = rho * u * w - b1 * b3
        out[4] = 0.0
        out[5] = u * b2 - v * b1
        out[6] = u * b3 - w * b1
        out[7] = (energy + p + pb) * u - udotb * b1
        out[8] = u * a - t
        out[9] = u * b + t
    else:
        t = b1 * tangential_slope
        out[0] = rho * v
        out[1] = rho * u * v - b1 * b2
        out[2] = rho * v * v + p + pb - b2 * b2
        out[3] = rho * v * w - b2 * b3
        out[4] = v * b1 - u * b2
        out[5] = 0.0
        out[6] = v * b3 - w * b2
        out[7] = (energy + p + pb) * v - udotb * b2
        out[8] = v * a + t
        out[9] = v * b - t
    return out


def fast_speed(prim, gamma: float, axis: str) -> float:
    """Fast magneto-acoustic speed for the given normal direction."""
    rho, p = prim[0], prim[PR]
    b1, b2, b3 = prim[4], prim[5], prim[6]
    bsq = b1 * b1 + b2 * b2 + b3 * b3
    bn = b1 if axis == "x" else b2
    gp = gamma * p
    s = gp + bsq
    rad = s * s - 4.0 * gp * bn * bn
    if rad < 0.0:  # roundoff only; analytically nonnegative
        rad = 0.0
    return np.sqrt(0.5 * (s + np.sqrt(rad)) / rho)


def speeds(prim_minus, prim_plus, gamma: float, axis: str):
    """One-sided local speeds (s_plus >= 0 >= s_minus) at one interface.

    Roe-averaged normal velocity plus a magnetic-jump correction
    beta = |b^- - b^+| / (sqrt(rho^-) + sqrt(rho^+)) overestimate the
    propagation speeds for robust positivity.
    """
    ui = U if axis == "x" else V
    ul, ur = prim_minus[ui], prim_plus[ui]
    rl, rr = prim_minus[0], prim_plus[0]
    sql, sqr = np.sqrt(rl), np.sqrt(rr)
    u_roe = (ul * sql + ur * sqr) / (sql + sqr)
    db1 = prim_minus[4] - prim_plus[4]
    db2 = prim_minus[5] - prim_plus[5]
    db3 = prim_minus[6] - prim_plus[6]
    beta = np.sqrt(db1 * db1 + db2 * db2 + db3 * db3) / (sql + sqr)
    cl = fast_speed(prim_minus, gamma, axis)
    cr = fast_speed(prim_plus, gamma, axis)
    s_plus = max(max(ul, u_roe) + cl + beta, max(ur, u_roe) + cr + beta, 0.0)
    s_minus = min(min(ul, u_roe) - cl - beta, min(ur, u_roe) - cr - beta, 0.0)
    return s_plus, s_minus


def noncons_cell(prim, wx, wy, sigma: float, a_bar: float, b_bar: float,
                 dx: float, dy: float, axis: str) -> np.ndarray:
    """Exact cell integral of the nonconservative product over one cell.

    ``wx``/``wy`` are the cell's W-slopes (generalized minmod); the
    divergence-carrying slope itself enters as sigma * a_bar (axis='x')
    or sigma * b_bar (axis='y').
    """
    rho, u, v, w, b1, b2, b3 = prim[:7]
    udotb = u * b1 + v * b2 + w * b3
    out = np.zeros(NCOMP)
    if axis == "x":
        sa = sigma * a_bar
        out[1] = -b1 * sa * dx
        out[2] = -b2 * sa * dx
        out[3] = -b3 * sa * dx
        out[4] = -u * sa * dx
        out[5] = -v * sa * dx
        out[6] = -w * sa * dx
        corr = (dx * dx / 12.0) * (wx[U] * sa + wx[V] * wx[B2] + wx[W] * wx[B3])
        out[7] = -(udotb + corr) * sa * dx
    else:
        sb = sigma * b_bar
        out[1] = -b1 * sb * dy
        out[2] = -b2 * sb * dy
        out[3] = -b3 * sb * dy
        out[4] = -u * sb * dy
        out[5] = -v * sb * dy
        out[6] = -w * sb * dy
        corr = (dy * dy / 12.0) * (wy[U] * wy[B1] + wy[V] * sb + wy[W] * wy[B3])
        out[7] = -(udotb + corr) * sb * dy
    return out


def noncons_interface(prim_minus, prim_plus, axis: str) -> np.ndarray:
    """Exact integral of the nonconservative product along the linear path
    between the two reconstructed face states at one interface."""
    jump = prim_plus[4] - prim_minus[4] if axis == "x" else prim_plus[5] - prim_minus[5]
    out = np.zeros(NCOMP)
    ul, vl, wl = prim_minus[1], prim_minus[2], prim_minus[3]
    ur, vr, wr = prim_plus[1], prim_plus[2], prim_plus[3]
    b1l, b2l, b3l = prim_minus[4], prim_minus[5], prim_minus[6]
    b1r, b2r, b3r = prim_plus[4], prim_plus[5], prim_plus[6]
    out[1] = -0.5 * (b1l + b1r) * jump
    out[2] = -0.5 * (b2l + b2r) * jump
    out[3] = -0.5 * (b3l + b3r) * jump
    out[4] = -0.5 * (ul + ur) * jump
    out[5] = -0.5 * (vl + vr) * jump
    out[6] = -0.5 * (wl + wr) * jump
    ll = ul * b1l + vl * b2l + wl * b3l
    lr = ul * b1r + vl * b2r + wl * b3r
    rl = ur * b1l + vr * b2l + wr * b3l
    rr = ur * b1r + vr * b2r + wr * b3r
    out[7] = -(2.0 * ll + lr + rl + 2.0 * rr) * jump / 6.0
    return out


class IdealMHD:
    """The augmented ideal MHD system as a SystemModel.

    Vectorized methods take component-stacked arrays (ncomp leading axis)
    and broadcast over the remaining axes.
    """

    kind = "ideal"
    ncomp = NCOMP
    names = CONS_NAMES
    #: W-components whose normal slope is replaced by the scaled divergence
    #: variable, and the W-indices of those variables.
    mag_x, mag_y, div_a, div_b = B1, B2, IA, IB

    def __init__(self, gamma: float):
        self.params = GasParams(gamma)
        self.gamma = self.params.gamma

    # -- conversions ------------------------------------------------

    def primitives_array(self, q: np.ndarray) -> np.ndarray:
        """W field from the conserved field; no positivity checks here."""
        g = self.gamma
        w = np.empty_like(q)
        rho = q[RHO]
        w[0] = rho
        w[1] = q[MX] / rho
        w[2] = q[MY] / rho
        w[3] = q[MZ] / rho
        w[4] = q[B1]
        w[5] = q[B2]
        w[6] = q[B3]
        ke = 0.5 * rho * (w[1] ** 2 + w[2] ** 2 + w[3] ** 2)
        pb = 0.5 * (q[B1] ** 2 + q[B2] ** 2 + q[B3] ** 2)
        w[7] = (g - 1.0) * (q[EN] - ke - pb)
        w[8] = q[IA]
        w[9] = q[IB]
        return w

    def check_positivity(self, q: np.ndarray, interior) -> None:
        """Abort with the first offending interior cell on rho or p <= 0."""
        sk, sj = interior
        rho = q[RHO][sk, sj]
        if not (rho > 0.0).all():
            k, j = [int(ix[0]) for ix in np.nonzero(~(rho > 0.0))]
            raise PositivityError("density", float(rho[k, j]), cell=(j, k))
        u = q[MX][sk, sj] / rho
        v = q[MY][sk, sj] / rho
        w = q[MZ][sk, sj] / rho
        pb = 0.5 * (q[B1][sk, sj] ** 2 + q[B2][sk, sj] ** 2 + q[B3][sk, sj] ** 2)
        p = (self.gamma - 1.0) * (q[EN][sk, sj] - 0.5 * rho * (u * u + v * v + w * w) - pb)
        if not (p > 0.0).all():
            k, j = [int(ix[0]) for ix in np.nonzero(~(p > 0.0))]
            raise PositivityError("pressure", float(p[k, j]), cell=(j, k))

    def face_conserved(self, wf: np.ndarray) -> np.ndarray:
        """Conserved vector at faces from face W values (EOS for the energy)."""
        g = self.gamma
        u = np.empty_like(wf)
        rho = wf[0]
        u[0] = rho
        u[1] = rho * wf[1]
        u[2] = rho * wf[2]
        u[3] = rho * wf[3]
        u[4] = wf[4]
        u[5] = wf[5]
        u[6] = wf[6]
        u[7] = wf[7] / (g - 1.0) + 0.5 * rho * (wf[1] ** 2 + wf[2] ** 2 + wf[3] ** 2) + 0.5 * (
            wf[4] ** 2 + wf[5] ** 2 + wf[6] ** 2
        )
        u[8] = wf[8]
        u[9] = wf[9]
        return u

    def check_face_positivity(self, wf: np.ndarray, where: str) -> None:
        bad = ~((wf[0] > 0.0) & (wf[7] > 0.0))
        if bad.any():
            idx = np.nonzero(bad)
            rho = float(wf[0][tuple(i[0] for i in idx)])
            quantity = "face density" if rho <= 0 else "face pressure"
            val = rho if rho <= 0 else float(wf[7][tuple(i[0] for i in idx)])
            raise PositivityError(quantity, val, where=where)

    # -- fluxes and speeds ------------------------------------------

    def flux_array(self, wf: np.ndarray, uf: np.ndarray, axis: str,
                   tangential_slope: np.ndarray) -> np.ndarray:
        rho, u, v, w, b1, b2, b3, p = wf[:8]
        energy = uf[EN]
        pb = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
        udotb = u * b1 + v * b2 + w * b3
        f = np.empty_like(wf)
        if axis == "x":
            t = b2 * tangential_slope
            f[0] = rho * u
            f[1] = rho * u * u + p + pb - b1 * b1
            f[2] = rho * u * v - b1 * b2
            f[3] = rho * u * w - b1 * b3
            f[4] = 0.0
            f[5] = u * b2 - v * b1
            f[6] = u * b3 - w * b1
            f[7] = (energy + p + pb) * u - udotb * b1
            f[8] = u * wf[8] - t
            f[9] = u * wf[9] + t
        else:
            t = b1 * tangential_slope
            f[0] = rho * v
            f[1] = rho * u * v - b1 * b2
            f[2] = rho * v * v + p + pb - b2 * b2
            f[3] = rho * v * w - b2 * b3
            f[4] = v * b1 - u * b2
            f[5] = 0.0
            f[6] = v * b3 - w * b2
            f[7] = (energy + p + pb) * v - udotb * b2
            f[8] = v * wf[8] + t
            f[9] = v * wf[9] - t
        return f

    def fast_speed_array(self, wf: np.ndarray, axis: str) -> np.ndarray:
        rho, p = wf[0], wf[7]
        bn = wf[4] if axis == "x" else wf[5]
        bsq = wf[4] ** 2 + wf[5] ** 2 + wf[6] ** 2
        gp = self.gamma * p
        s = gp + bsq
        rad = np.maximum(s * s - 4.0 * gp * bn * bn, 0.0)
        return np.sqrt(0.5 * (s + np.sqrt(rad)) / rho)

    def speeds_array(self, wl: np.ndarray, wr: np.ndarray, axis: str):
        ui = 1 if axis == "x" else 2
        ul, ur = wl[ui], wr[ui]
        sql, sqr = np.sqrt(wl[0]), np.sqrt(wr[0])
        u_roe = (ul * sql + ur * sqr) / (sql + sqr)
        beta = np.sqrt(
            (wl[4] - wr[4]) ** 2 + (wl[5] - wr[5]) ** 2 + (wl[6] - wr[6]) ** 2
        ) / (sql + sqr)
        cl = self.fast_speed_array(wl, axis)
        cr = self.fast_speed_array(wr, axis)
        sp = np.maximum(
            np.maximum(np.maximum(ul, u_roe) + cl + beta, np.maximum(ur, u_roe) + cr + beta), 0.0
        )
        sm = np.minimum(
            np.minimum(np.minimum(ul, u_roe) - cl - beta, np.minimum(ur, u_roe) - cr - beta), 0.0
        )
        return sp, sm

    # -- nonconservative products ------------------------------------

    def noncons_cell_array(self, w, wx, wy, sigma, dx, dy, axis) -> np.ndarray:
        u, v, vz = w[1], w[2], w[3]
        b1, b2, b3 = w[4], w[5], w[6]
        udotb = u * b1 + v * b2 + vz * b3
        out = np.zeros_like(w)
        if axis == "x":
            sa = sigma * w[8]
            corr = (dx * dx / 12.0) * (wx[1] * sa + wx[2] * wx[5] + wx[3] * wx[6])
            scale = sa * dx
        else:
            sa = sigma * w[9]
            corr = (dy * dy / 12.0) * (wy[1] * wy[4] + wy[2] * sa + wy[3] * wy[6])
            scale = sa * dy
        out[1] = -b1 * scale
        out[2] = -b2 * scale
        out[3] = -b3 * scale
        out[4] = -u * scale
        out[5] = -v * scale
        out[6] = -vz * scale
        out[7] = -(udotb + corr) * scale
        return out

    def noncons_iface_array(self, wl, wr, axis) -> np.ndarray:
        jump = wr[4] - wl[4] if axis == "x" else wr[5] - wl[5]
        out = np.zeros_like(wl)
        out[1] = -0.5 * (wl[4] + wr[4]) * jump
        out[2] = -0.5 * (wl[5] + wr[5]) * jump
        out[3] = -0.5 * (wl[6] + wr[6]) * jump
        out[4] = -0.5 * (wl[1] + wr[1]) * jump
        out[5] = -0.5 * (wl[2] + wr[2]) * jump
        out[6] = -0.5 * (wl[3] + wr[3]) * jump
        ll = wl[1] * wl[4] + wl[2] * wl[5] + wl[3] * wl[6]
        lr = wl[1] * wr[4] + wl[2] * wr[5] + wl[3] * wr[6]
        rl = wr[1] * wl[4] + wr[2] * wl[5] + wr[3] * wl[6]
        rr = wr[1] * wr[4] + wr[2] * wr[5] + wr[3] * wr[6]
        out[7] = -(2.0 * ll + lr + rl + 2.0 * rr) * jump / 6.0
        return out
