# cython: language_level=3
"""Compiled RHS sweeps for both systems.

Same pipeline and per-component formulas as `_rhs_numpy`; one pass per
direction with rolling interface buffers, no temporaries proportional to
the number of interfaces.  Returns (padded rhs array, CFL speed bound).
"""

import numpy as np

from .errors import NumericsError, PositivityError

from libc.math cimport fabs, fmax, fmin, isnan, log1p, sqrt

cdef double EPS_SPEED = 1e-12
cdef double EPS_DIV = 1e-14
cdef double Z_SERIES = 1e-3


cdef inline double ratio_integral(double f0, double df, double h0, double dh) noexcept nogil:
    # integral over [0,1] of (f0 + t df)/(h0 + t dh), stable for small jumps
    cdef double z = dh / h0
    cdef double lg, m0, m1
    if fabs(z) <= Z_SERIES:
        m0 = 1.0 - z * (0.5 - z * (1.0 / 3.0 - z * (0.25 - z * 0.2)))
        m1 = 0.5 - z * (1.0 / 3.0 - z * (0.25 - z * (0.2 - z / 6.0)))
    else:
        lg = log1p(z)
        m0 = lg / z
        m1 = (z - lg) / (z * z)
    return (f0 * m0 + df * m1) / h0


cdef inline double mm3(double a, double b, double c) noexcept nogil:
    if a > 0.0 and b > 0.0 and c > 0.0:
        return fmin(fmin(a, b), c)
    if a < 0.0 and b < 0.0 and c < 0.0:
        return fmax(fmax(a, b), c)
    return 0.0


cdef inline double gm(double wp, double wc, double wn, double theta, double delta) noexcept nogil:
    return mm3(theta * (wc - wp) / delta,
               (wn - wp) / (2.0 * delta),
               theta * (wn - wc) / delta)


cdef inline double sigma_factor(double a_bar, double b_bar, double hat_ax, double hat_by) noexcept nogil:
    cdef double floor = EPS_DIV * fmax(fmax(1.0, fabs(a_bar)),
                                       fmax(fmax(fabs(b_bar), fabs(hat_ax)), fabs(hat_by)))
    cdef double sx, sy
    if fabs(a_bar) <= floor:
        sx = 1.0
    elif hat_ax * a_bar > 0.0:
        sx = fmin(1.0, hat_ax / a_bar)
    else:
        sx = 0.0
    if fabs(b_bar) <= floor:
        sy = 1.0
    elif hat_by * b_bar > 0.0:
        sy = fmin(1.0, hat_by / b_bar)
    else:
        sy = 0.0
    return fmin(1.0, fmin(sx, sy))


# ==================================================================
# ideal MHD
# ==================================================================

cdef inline double fast_speed_ideal(double rho, double p, double b1, double b2,
                                    double b3, double bn, double gamma) noexcept nogil:
    cdef double bsq = b1 * b1 + b2 * b2 + b3 * b3
    cdef double gp = gamma * p
    cdef double s = gp + bsq
    cdef double rad = s * s - 4.0 * gp * bn * bn
    if rad < 0.0:
        rad = 0.0
    return sqrt(0.5 * (s + sqrt(rad)) / rho)


cdef inline void flux_ideal_x(double* wf, double energy, double uy, double* f) noexcept nogil:
    cdef double rho = wf[0], u = wf[1], v = wf[2], w = wf[3]
    cdef double b1 = wf[4], b2 = wf[5], b3 = wf[6], p = wf[7]
    cdef double pb = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    cdef double udotb = u * b1 + v * b2 + w * b3
    cdef double t = b2 * uy
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


cdef inline void flux_ideal_y(double* wf, double energy, double vx, double* f) noexcept nogil:
    cdef double rho = wf[0], u = wf[1], v = wf[2], w = wf[3]
    cdef double b1 = wf[4], b2 = wf[5], b3 = wf[6], p = wf[7]
    cdef double pb = 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    cdef double udotb = u * b1 + v * b2 + w * b3
    cdef double t = b1 * vx
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


cdef inline double energy_ideal(double* wf, double gamma) noexcept nogil:
    return wf[7] / (gamma - 1.0) \
        + 0.5 * wf[0] * (wf[1] * wf[1] + wf[2] * wf[2] + wf[3] * wf[3]) \
        + 0.5 * (wf[4] * wf[4] + wf[5] * wf[5] + wf[6] * wf[6])


cdef inline void cons_ideal(double* wf, double energy, double* u) noexcept nogil:
    u[0] = wf[0]
    u[1] = wf[0] * wf[1]
    u[2] = wf[0] * wf[2]
    u[3] = wf[0] * wf[3]
    u[4] = wf[4]
    u[5] = wf[5]
    u[6] = wf[6]
    u[7] = energy
    u[8] = wf[8]
    u[9] = wf[9]


cdef inline void qpsi_ideal(double* wl, double* wr, double jump, double* out) noexcept nogil:
    out[0] = 0.0
    out[1] = -0.5 * (wl[4] + wr[4]) * jump
    out[2] = -0.5 * (wl[5] + wr[5]) * jump
    out[3] = -0.5 * (wl[6] + wr[6]) * jump
    out[4] = -0.5 * (wl[1] + wr[1]) * jump
    out[5] = -0.5 * (wl[2] + wr[2]) * jump
    out[6] = -0.5 * (wl[3] + wr[3]) * jump
    cdef double ll = wl[1] * wl[4] + wl[2] * wl[5] + wl[3] * wl[6]
    cdef double lr = wl[1] * wr[4] + wl[2] * wr[5] + wl[3] * wr[6]
    cdef double rl = wr[1] * wl[4] + wr[2] * wl[5] + wr[3] * wl[6]
    cdef double rr = wr[1] * wr[4] + wr[2] * wr[5] + wr[3] * wr[6]
    out[7] = -(2.0 * ll + lr + rl + 2.0 * rr) * jump / 6.0
    out[8] = 0.0
    out[9] = 0.0


cdef inline void cu_combine(double* fl, double* fr, double* ul, double* ur,
                            double sp, double sm, int ncomp,
                            double* flux, double* wp, double* wm) noexcept nogil:
    cdef double eps = EPS_SPEED * fmax(1.0, fmax(fabs(sp), fabs(sm)))
    cdef double den = sp - sm
    cdef int c
    if den < eps:
        for c in range(ncomp):
            flux[c] = 0.5 * (fl[c] + fr[c])
        wp[0] = 0.5
        wm[0] = -0.5
    else:
        for c in range(ncomp):
            flux[c] = (sp * fl[c] - sm * fr[c]) / den + (sp * sm / den) * (ur[c] - ul[c])
        wp[0] = sp / den
        wm[0] = sm / den


def rhs_ideal(double[:, :, ::1] q, double gamma, int ng, int nx, int ny,
              double dx, double dy, double theta):
    cdef int NY = ny + 2 * ng
    cdef int NX = nx + 2 * ng
    cdef int k, j, c, m
    cdef double rho, ke, pb

    w_arr = np.empty((10, NY, NX))
    wx_arr = np.zeros((10, NY, NX))
    wy_arr = np.zeros((10, NY, NX))
    sig_arr = np.zeros((NY, NX))
    rhs_arr = np.zeros((10, NY, NX))
    cdef double[:, :, ::1] w = w_arr
    cdef double[:, :, ::1] wx = wx_arr
    cdef double[:, :, ::1] wy = wy_arr
    cdef double[:, ::1] sig = sig_arr
    cdef double[:, :, ::1] rhs = rhs_arr

    # primitives everywhere
    for k in range(NY):
        for j in range(NX):
            rho = q[0, k, j]
            w[0, k, j] = rho
            w[1, k, j] = q[1, k, j] / rho
            w[2, k, j] = q[2, k, j] / rho
            w[3, k, j] = q[3, k, j] / rho
            w[4, k, j] = q[4, k, j]
            w[5, k, j] = q[5, k, j]
            w[6, k, j] = q[6, k, j]
            ke = 0.5 * rho * (w[1, k, j] * w[1, k, j] + w[2, k, j] * w[2, k, j]
                              + w[3, k, j] * w[3, k, j])
            pb = 0.5 * (q[4, k, j] * q[4, k, j] + q[5, k, j] * q[5, k, j]
                        + q[6, k, j] * q[6, k, j])
            w[7, k, j] = (gamma - 1.0) * (q[7, k, j] - ke - pb)
            w[8, k, j] = q[8, k, j]
            w[9, k, j] = q[9, k, j]

    # slopes + divergence-free scaling
    cdef double hat_ax, hat_by, s
    for k in range(1, NY - 1):
        for j in range(1, NX - 1):
            for c in range(10):
                wx[c, k, j] = gm(w[c, k, j - 1], w[c, k, j], w[c, k, j + 1], theta, dx)
                wy[c, k, j] = gm(w[c, k - 1, j], w[c, k, j], w[c, k + 1, j], theta, dy)
            hat_ax = wx[4, k, j]
            hat_by = wy[5, k, j]
            s = sigma_factor(w[8, k, j], w[9, k, j], hat_ax, hat_by)
            sig[k, j] = s
            wx[4, k, j] = s * w[8, k, j]
            wy[5, k, j] = s * w[9, k, j]

    cdef double hx = 0.5 * dx
    cdef double hy = 0.5 * dy
    cdef double bound = np.inf
    cdef double wl[10]
    cdef double wr[10]
    cdef double uul[10]
    cdef double uur[10]
    cdef double fl[10]
    cdef double fr[10]
    cdef double flx[10]
    cdef double qps[10]
    cdef double pflux[10]
    cdef double pqpsi[10]
    cdef double el, er, sql, sqr, u_roe, beta, cl, cr, sp, sm, spd
    cdef double wp_cur, wm_cur, wp_prev
    cdef double sa, corr, udotb, bx, qc, jump

    prow_arr = np.zeros((10, NX))
    pwp_arr = np.zeros(NX)
    pq_arr = np.zeros((10, NX))
    cdef double[:, ::1] prow = prow_arr
    cdef double[:, ::1] pqrow = pq_arr
    cdef double[::1] pwp = pwp_arr

    # ---------------- x sweep ----------------
    for k in range(ng, ng + ny):
        wp_prev = 0.0
        for j in range(1, nx + 2):
            for c in range(10):
                wl[c] = w[c, k, j] + hx * wx[c, k, j]
                wr[c] = w[c, k, j + 1] - hx * wx[c, k, j + 1]
            if wl[0] <= 0.0 or wr[0] <= 0.0:
                raise PositivityError("face density", min(wl[0], wr[0]),
                                      cell=(j - ng, k - ng), where="x faces")
            if wl[7] <= 0.0 or wr[7] <= 0.0:
                raise PositivityError("face pressure", min(wl[7], wr[7]),
                                      cell=(j - ng, k - ng), where="x faces")
            el = energy_ideal(wl, gamma)
            er = energy_ideal(wr, gamma)
            cons_ideal(wl, el, uul)
            cons_ideal(wr, er, uur)
            sql = sqrt(wl[0])
            sqr = sqrt(wr[0])
            u_roe = (wl[1] * sql + wr[1] * sqr) / (sql + sqr)
            beta = sqrt((wl[4] - wr[4]) ** 2 + (wl[5] - wr[5]) ** 2
                        + (wl[6] - wr[6]) ** 2) / (sql + sqr)
            cl = fast_speed_ideal(wl[0], wl[7], wl[4], wl[5], wl[6], wl[4], gamma)
            cr = fast_speed_ideal(wr[0], wr[7], wr[4], wr[5], wr[6], wr[4], gamma)
            sp = fmax(fmax(fmax(wl[1], u_roe) + cl + beta, fmax(wr[1], u_roe) + cr + beta), 0.0)
            sm = fmin(fmin(fmin(wl[1], u_roe) - cl - beta, fmin(wr[1], u_roe) - cr - beta), 0.0)
            spd = fmax(sp, -sm)
            if spd > 0.0 and dx / spd < bound:
                bound = dx / spd
            flux_ideal_x(wl, el, wy[1, k, j], fl)
            flux_ideal_x(wr, er, wy[1, k, j + 1], fr)
            cu_combine(fl, fr, uul, uur, sp, sm, 10, flx, &wp_cur, &wm_cur)
            jump = wr[4] - wl[4]
            qpsi_ideal(wl, wr, jump, qps)
            if j >= 2:
                # cell j: x-face terms and the x cell term
                sa = sig[k, j] * w[8, k, j]
                udotb = (w[1, k, j] * w[4, k, j] + w[2, k, j] * w[5, k, j]
                         + w[3, k, j] * w[6, k, j])
                corr = (dx * dx / 12.0) * (wx[1, k, j] * sa + wx[2, k, j] * wx[5, k, j]
                                           + wx[3, k, j] * wx[6, k, j])
                for c in range(10):
                    bx = flx[c] - pflux[c] - wp_prev * pqpsi[c] + wm_cur * qps[c]
                    if c == 0 or c == 8 or c == 9:
                        qc = 0.0
                    elif c < 4:
                        qc = -w[c + 3, k, j] * sa * dx
                    elif c < 7:
                        qc = -w[c - 3, k, j] * sa * dx
                    else:
                        qc = -(udotb + corr) * sa * dx
                    rhs[c, k, j] = -(bx - qc) / dx
            for c in range(10):
                pflux[c] = flx[c]
                pqpsi[c] = qps[c]
            wp_prev = wp_cur

    # ---------------- y sweep ----------------
    for m in range(1, ny + 2):
        for j in range(ng, ng + nx):
            for c in range(10):
                wl[c] = w[c, m, j] + hy * wy[c, m, j]
                wr[c] = w[c, m + 1, j] - hy * wy[c, m + 1, j]
            if wl[0] <= 0.0 or wr[0] <= 0.0:
                raise PositivityError("face density", min(wl[0], wr[0]),
                                      cell=(j - ng, m - ng), where="y faces")
            if wl[7] <= 0.0 or wr[7] <= 0.0:
                raise PositivityError("face pressure", min(wl[7], wr[7]),
                                      cell=(j - ng, m - ng), where="y faces")
            el = energy_ideal(wl, gamma)
            er = energy_ideal(wr, gamma)
            cons_ideal(wl, el, uul)
            cons_ideal(wr, er, uur)
            sql = sqrt(wl[0])
            sqr = sqrt(wr[0])
            u_roe = (wl[2] * sql + wr[2] * sqr) / (sql + sqr)
            beta = sqrt((wl[4] - wr[4]) ** 2 + (wl[5] - wr[5]) ** 2
                        + (wl[6] - wr[6]) ** 2) / (sql + sqr)
            cl = fast_speed_ideal(wl[0], wl[7], wl[4], wl[5], wl[6], wl[5], gamma)
            cr = fast_speed_ideal(wr[0], wr[7], wr[4], wr[5], wr[6], wr[5], gamma)
            sp = fmax(fmax(fmax(wl[2], u_roe) + cl + beta, fmax(wr[2], u_roe) + cr + beta), 0.0)
            sm = fmin(fmin(fmin(wl[2], u_roe) - cl - beta, fmin(wr[2], u_roe) - cr - beta), 0.0)
            spd = fmax(sp, -sm)
            if spd > 0.0 and dy / spd < bound:
                bound = dy / spd
            flux_ideal_y(wl, el, wx[2, m, j], fl)
            flux_ideal_y(wr, er, wx[2, m + 1, j], fr)
            cu_combine(fl, fr, uul, uur, sp, sm, 10, flx, &wp_cur, &wm_cur)
            jump = wr[5] - wl[5]
            qpsi_ideal(wl, wr, jump, qps)
            if m >= 2:
                sa = sig[m, j] * w[9, m, j]
                udotb = (w[1, m, j] * w[4, m, j] + w[2, m, j] * w[5, m, j]
                         + w[3, m, j] * w[6, m, j])
                corr = (dy * dy / 12.0) * (wy[1, m, j] * wy[4, m, j]
                                           + wy[2, m, j] * sa + wy[3, m, j] * wy[6, m, j])
                for c in range(10):
                    bx = flx[c] - prow[c, j] - pwp[j] * pqrow[c, j] + wm_cur * qps[c]
                    if c == 0 or c == 8 or c == 9:
                        qc = 0.0
                    elif c < 4:
                        qc = -w[c + 3, m, j] * sa * dy
                    elif c < 7:
                        qc = -w[c - 3, m, j] * sa * dy
                    else:
                        qc = -(udotb + corr) * sa * dy
                    rhs[c, m, j] = rhs[c, m, j] - (bx - qc) / dy
            for c in range(10):
                prow[c, j] = flx[c]
                pqrow[c, j] = qps[c]
            pwp[j] = wp_cur

    for c in range(10):
        for k in range(ng, ng + ny):
            for j in range(ng, ng + nx):
                if isnan(rhs[c, k, j]):
                    raise NumericsError(
                        f"NaN in RHS component {c} at interior cell (j={j - ng}, k={k - ng})")
    return rhs_arr, bound


# ==================================================================
# shallow-water MHD
# ==================================================================

cdef inline void flux_sw_x(double* wf, double g, double uy, double* f) noexcept nogil:
    cdef double h = wf[0], u = wf[1], v = wf[2], ha = wf[3], hb = wf[4]
    cdef double t = hb * uy
    f[0] = h * u
    f[1] = h * u * u + 0.5 * g * h * h - ha * ha / h
    f[2] = h * u * v - ha * hb / h
    f[3] = 0.0
    f[4] = hb * u - ha * v
    f[5] = u * wf[5] - t
    f[6] = u * wf[6] + t


cdef inline void flux_sw_y(double* wf, double g, double vx, double* f) noexcept nogil:
    cdef double h = wf[0], u = wf[1], v = wf[2], ha = wf[3], hb = wf[4]
    cdef double t = ha * vx
    f[0] = h * v
    f[1] = h * u * v - ha * hb / h
    f[2] = h * v * v + 0.5 * g * h * h - hb * hb / h
    f[3] = ha * v - hb * u
    f[4] = 0.0
    f[5] = v * wf[5] + t
    f[6] = v * wf[6] - t


cdef inline void cons_sw(double* wf, double* u) noexcept nogil:
    u[0] = wf[0]
    u[1] = wf[0] * wf[1]
    u[2] = wf[0] * wf[2]
    u[3] = wf[3]
    u[4] = wf[4]
    u[5] = wf[5]
    u[6] = wf[6]


cdef inline void qpsi_sw(double* wl, double* wr, double mult, double* out) noexcept nogil:
    cdef double hl = wl[0], hr = wr[0]
    cdef double jh = hr - hl
    cdef double jha = wr[3] - wl[3]
    cdef double jhb = wr[4] - wl[4]
    out[0] = 0.0
    out[1] = -mult * ratio_integral(wl[3], jha, hl, jh)
    out[2] = -mult * ratio_integral(wl[4], jhb, hl, jh)
    out[3] = -0.5 * (wl[1] + wr[1]) * mult
    out[4] = -0.5 * (wl[2] + wr[2]) * mult
    out[5] = 0.0
    out[6] = 0.0


def rhs_swmhd(double[:, :, ::1] q, double g, int ng, int nx, int ny,
              double dx, double dy, double theta):
    cdef int NY = ny + 2 * ng
    cdef int NX = nx + 2 * ng
    cdef int k, j, c, m
    cdef double h

    w_arr = np.empty((7, NY, NX))
    wx_arr = np.zeros((7, NY, NX))
    wy_arr = np.zeros((7, NY, NX))
    sig_arr = np.zeros((NY, NX))
    rhs_arr = np.zeros((7, NY, NX))
    cdef double[:, :, ::1] w = w_arr
    cdef double[:, :, ::1] wx = wx_arr
    cdef double[:, :, ::1] wy = wy_arr
    cdef double[:, ::1] sig = sig_arr
    cdef double[:, :, ::1] rhs = rhs_arr

    for k in range(NY):
        for j in range(NX):
            h = q[0, k, j]
            w[0, k, j] = h
            w[1, k, j] = q[1, k, j] / h
            w[2, k, j] = q[2, k, j] / h
            w[3, k, j] = q[3, k, j]
            w[4, k, j] = q[4, k, j]
            w[5, k, j] = q[5, k, j]
            w[6, k, j] = q[6, k, j]

    cdef double hat_ax, hat_by, s
    for k in range(1, NY - 1):
        for j in range(1, NX - 1):
            for c in range(7):
                wx[c, k, j] = gm(w[c, k, j - 1], w[c, k, j], w[c, k, j + 1], theta, dx)
                wy[c, k, j] = gm(w[c, k - 1, j], w[c, k, j], w[c, k + 1, j], theta, dy)
            hat_ax = wx[3, k, j]
            hat_by = wy[4, k, j]
            s = sigma_factor(w[5, k, j], w[6, k, j], hat_ax, hat_by)
            sig[k, j] = s
            wx[3, k, j] = s * w[5, k, j]
            wy[4, k, j] = s * w[6, k, j]

    cdef double hx = 0.5 * dx
    cdef double hy = 0.5 * dy
    cdef double bound = np.inf
    cdef double wl[7]
    cdef double wr[7]
    cdef double uul[7]
    cdef double uur[7]
    cdef double fl[7]
    cdef double fr[7]
    cdef double flx[7]
    cdef double qps[7]
    cdef double pflux[7]
    cdef double pqpsi[7]
    cdef double al, ar, cl, cr, sp, sm, spd
    cdef double wp_cur, wm_cur, wp_prev
    cdef double sa, bx, qc, mult, hs, h_hi, h_lo, c1, c2

    prow_arr = np.zeros((7, NX))
    pwp_arr = np.zeros(NX)
    pq_arr = np.zeros((7, NX))
    cdef double[:, ::1] prow = prow_arr
    cdef double[:, ::1] pqrow = pq_arr
    cdef double[::1] pwp = pwp_arr

    # ---------------- x sweep ----------------
    for k in range(ng, ng + ny):
        wp_prev = 0.0
        for j in range(1, nx + 2):
            for c in range(7):
                wl[c] = w[c, k, j] + hx * wx[c, k, j]
                wr[c] = w[c, k, j + 1] - hx * wx[c, k, j + 1]
            if wl[0] <= 0.0 or wr[0] <= 0.0:
                raise PositivityError("face thickness", min(wl[0], wr[0]),
                                      cell=(j - ng, k - ng), where="x faces")
            cons_sw(wl, uul)
            cons_sw(wr, uur)
            al = wl[3] / wl[0]
            ar = wr[3] / wr[0]
            cl = sqrt(al * al + g * wl[0])
            cr = sqrt(ar * ar + g * wr[0])
            sp = fmax(fmax(wl[1] + cl, wr[1] + cr), 0.0)
            sm = fmin(fmin(wl[1] - cl, wr[1] - cr), 0.0)
            spd = fmax(sp, -sm)
            if spd > 0.0 and dx / spd < bound:
                bound = dx / spd
            flux_sw_x(wl, g, wy[1, k, j], fl)
            flux_sw_x(wr, g, wy[1, k, j + 1], fr)
            cu_combine(fl, fr, uul, uur, sp, sm, 7, flx, &wp_cur, &wm_cur)
            mult = wr[3] - wl[3]
            qpsi_sw(wl, wr, mult, qps)
            if j >= 2:
                sa = sig[k, j] * w[5, k, j]
                hs = wx[0, k, j]
                h_hi = w[0, k, j] + 0.5 * hs * dx
                h_lo = w[0, k, j] - 0.5 * hs * dx
                if h_hi <= 0.0 or h_lo <= 0.0:
                    raise PositivityError("reconstructed face thickness",
                                          min(h_hi, h_lo), cell=(j - ng, k - ng))
                c1 = dx * ratio_integral(w[3, k, j] - 0.5 * sa * dx, sa * dx,
                                         h_lo, hs * dx)
                c2 = dx * ratio_integral(w[4, k, j] - 0.5 * wx[4, k, j] * dx,
                                         wx[4, k, j] * dx, h_lo, hs * dx)
                for c in range(7):
                    bx = flx[c] - pflux[c] - wp_prev * pqpsi[c] + wm_cur * qps[c]
                    if c == 1:
                        qc = -sa * c1
                    elif c == 2:
                        qc = -sa * c2
                    elif c == 3:
                        qc = -w[1, k, j] * sa * dx
                    elif c == 4:
                        qc = -w[2, k, j] * sa * dx
                    else:
                        qc = 0.0
                    rhs[c, k, j] = -(bx - qc) / dx
            for c in range(7):
                pflux[c] = flx[c]
                pqpsi[c] = qps[c]
            wp_prev = wp_cur

    # ---------------- y sweep ----------------
    for m in range(1, ny + 2):
        for j in range(ng, ng + nx):
            for c in range(7):
                wl[c] = w[c, m, j] + hy * wy[c, m, j]
                wr[c] = w[c, m + 1, j] - hy * wy[c, m + 1, j]
            if wl[0] <= 0.0 or wr[0] <= 0.0:
                raise PositivityError("face thickness", min(wl[0], wr[0]),
                                      cell=(j - ng, m - ng), where="y faces")
            cons_sw(wl, uul)
            cons_sw(wr, uur)
            al = wl[4] / wl[0]
            ar = wr[4] / wr[0]
            cl = sqrt(al * al + g * wl[0])
            cr = sqrt(ar * ar + g * wr[0])
            sp = fmax(fmax(wl[2] + cl, wr[2] + cr), 0.0)
            sm = fmin(fmin(wl[2] - cl, wr[2] - cr), 0.0)
            spd = fmax(sp, -sm)
            if spd > 0.0 and dy / spd < bound:
                bound = dy / spd
            flux_sw_y(wl, g, wx[2, m, j], fl)
            flux_sw_y(wr, g, wx[2, m + 1, j], fr)
            cu_combine(fl, fr, uul, uur, sp, sm, 7, flx, &wp_cur, &wm_cur)
            mult = wr[4] - wl[4]
            qpsi_sw(wl, wr, mult, qps)
            if m >= 2:
                sa = sig[m, j] * w[6, m, j]
                hs = wy[0, m, j]
                h_hi = w[0, m, j] + 0.5 * hs * dy
                h_lo = w[0, m, j] - 0.5 * hs * dy
                if h_hi <= 0.0 or h_lo <= 0.0:
                    raise PositivityError("reconstructed face thickness",
                                          min(h_hi, h_lo), cell=(j - ng, m - ng))
                c1 = dy * ratio_integral(w[3, m, j] - 0.5 * wy[3, m, j] * dy,
                                         wy[3, m, j] * dy, h_lo, hs * dy)
                c2 = dy * ratio_integral(w[4, m, j] - 0.5 * sa * dy, sa * dy,
                                         h_lo, hs * dy)
                for c in range(7):
                    bx = flx[c] - prow[c, j] - pwp[j] * pqrow[c, j] + wm_cur * qps[c]
                    if c == 1:
                        qc = -sa * c1
                    elif c == 2:
                        qc = -sa * c2
                    elif c == 3:
                        qc = -w[1, m, j] * sa * dy
                    elif c == 4:
                        qc = -w[2, m, j] * sa * dy
                    else:
                        qc = 0.0
                    rhs[c, m, j] = rhs[c, m, j] - (bx - qc) / dy
            for c in range(7):
                prow[c, j] = flx[c]
                pqrow[c, j] = qps[c]
            pwp[j] = wp_cur

    for c in range(7):
        for k in range(ng, ng + ny):
            for j in range(ng, ng + nx):
                if isnan(rhs[c, k, j]):
                    raise NumericsError(
                        f"NaN in RHS component {c} at interior cell (j={j - ng}, k={k - ng})")
    return rhs_arr, bound
