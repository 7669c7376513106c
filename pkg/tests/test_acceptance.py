"""Acceptance suite: every criterion at its stated tolerance, one line each.

Benchmark runs are shared between criteria through cached helpers; the whole
module takes on the order of 15 minutes with the compiled backend.  Run as

    pytest tests/test_acceptance.py -v -s
"""

from __future__ import annotations

from functools import lru_cache
from types import SimpleNamespace

import numpy as np
import pytest
from scipy.integrate import quad

import pccu_mhd as pm
import pccu_mhd.ideal as ideal
import pccu_mhd.swmhd as sw
from pccu_mhd.convergence import run_convergence

from conftest import random_ideal_w, random_sw_w, rng


@lru_cache(maxsize=None)
def run_preset(name, nx=None, ny=None, t_final=None, snapshot_times=()):
    preset, grid, model, state = pm.setup_run(name, nx=nx, ny=ny)
    tf = preset.t_final if t_final is None else t_final
    diag = pm.DiagnosticsLog(model)
    snaps = {}

    def on_snapshot(t, st):
        snaps[t] = st.interior.copy()

    state, log = pm.integrate(
        state, model, preset.bc, pm.TimeParams(t_final=tf),
        snapshot_times=list(snapshot_times), on_snapshot=on_snapshot,
        diag_interval=10, on_sample=diag.sample,
    )
    return SimpleNamespace(preset=preset, grid=grid, model=model, state=state,
                           log=log, diag=diag, snaps=snaps)


def _derived_ideal(q, gamma):
    rho = q[0]
    u, v, w = q[1] / rho, q[2] / rho, q[3] / rho
    pb = 0.5 * (q[4] ** 2 + q[5] ** 2 + q[6] ** 2)
    p = (gamma - 1.0) * (q[7] - 0.5 * rho * (u * u + v * v + w * w) - pb)
    mach = np.sqrt(u * u + v * v + w * w) / np.sqrt(gamma * p / rho)
    return p, mach, pb


def _within(value, endpoint, frac):
    return abs(value - endpoint) <= frac * abs(endpoint)


# ------------------------------------------------------------------
# criterion 1: divergence preservation on every preset
# ------------------------------------------------------------------

@pytest.mark.parametrize("name", pm.PROBLEM_NAMES)
def test_criterion_1_divergence_preservation(name):
    extra = {"snapshot_times": (0.5, 2.0, 3.0, 4.0)} if name == "orszag-tang" else {}
    res = run_preset(name, **extra)
    worst = res.diag.max_divergence
    assert worst <= 1e-11, f"{name}: max|A+B| = {worst:g}"
    print(f"[PASS] criterion 1 ({name}): max|A+B| = {worst:.3e} <= 1e-11 "
          f"over {len(res.diag.samples)} samples, {len(res.log)} steps")


# ------------------------------------------------------------------
# criterion 2: mass conservation at 100x100, t = 2
# ------------------------------------------------------------------

@pytest.mark.parametrize("name", ["orszag-tang", "sw-orszag-tang"])
def test_criterion_2_mass_conservation(name):
    res = run_preset(name, nx=100, ny=100, t_final=2.0)
    masses = np.array([s[4] for s in res.diag.samples])
    drift = np.abs(masses - masses[0]).max() / abs(masses[0])
    assert drift <= 1e-11, f"{name}: relative mass drift {drift:g}"
    print(f"[PASS] criterion 2 ({name}): relative mass drift = {drift:.3e} <= 1e-11")


# ------------------------------------------------------------------
# criterion 3: blast positivity
# ------------------------------------------------------------------

def test_criterion_3_blast_positivity():
    res = run_preset("blast")
    min_p_all = res.diag.min_pressure
    assert min_p_all > 0.0, f"blast 200x200: min p over samples {min_p_all:g}"
    p, _, _ = _derived_ideal(res.state.interior, res.model.gamma)
    final_min = float(p.min())
    assert 0.08 <= final_min <= 0.12, f"blast 200x200 final min p = {final_min:g}"
    res4 = run_preset("blast", nx=400, ny=400)
    assert res4.diag.min_pressure > 0.0, "blast 400x400 lost pressure positivity"
    print(f"[PASS] criterion 3: blast 200x200 min p = {final_min:.4f} in [0.08, 0.12], "
          f"400x400 min p = {res4.diag.min_pressure:.4f} > 0")


# ------------------------------------------------------------------
# criterion 4: Orszag-Tang density range regression
# ------------------------------------------------------------------

OT_RANGES = {0.5: (2.11, 5.83), 2.0: (0.63, 6.17), 3.0: (1.29, 6.12), 4.0: (1.25, 5.8)}


def test_criterion_4_orszag_tang_ranges():
    res = run_preset("orszag-tang", snapshot_times=(0.5, 2.0, 3.0, 4.0))
    lines = []
    for t, (lo, hi) in OT_RANGES.items():
        rho = res.snaps[t][0]
        rmin, rmax = float(rho.min()), float(rho.max())
        assert _within(rmin, lo, 0.07), f"t={t}: density min {rmin:g} vs {lo} (+-7%)"
        assert _within(rmax, hi, 0.07), f"t={t}: density max {rmax:g} vs {hi} (+-7%)"
        lines.append(f"t={t:g}: [{rmin:.2f},{rmax:.2f}] vs [{lo},{hi}]")
    print("[PASS] criterion 4: " + "; ".join(lines))


# ------------------------------------------------------------------
# criterion 5: rotor range regression
# ------------------------------------------------------------------

def test_criterion_5_rotor_ranges():
    res = run_preset("rotor")
    assert res.diag.min_pressure > 0.0, "rotor produced nonpositive pressure"
    q = res.state.interior
    p, mach, pb = _derived_ideal(q, res.model.gamma)
    checks = {
        "rho": (q[0], 0.71, 8.95),
        "p": (p, 0.01, 0.78),
        "mach": (mach, 0.0, 2.9),
        "pb": (pb, 0.02, 0.65),
    }
    lines = []
    for label, (field, lo, hi) in checks.items():
        fmin, fmax = float(field.min()), float(field.max())
        if lo != 0.0:
            assert _within(fmin, lo, 0.10), f"rotor {label} min {fmin:g} vs {lo} (+-10%)"
        assert _within(fmax, hi, 0.10), f"rotor {label} max {fmax:g} vs {hi} (+-10%)"
        lines.append(f"{label}: [{fmin:.3f},{fmax:.3f}] vs [{lo},{hi}]")
    print("[PASS] criterion 5: " + "; ".join(lines) + f"; min p samples > 0")


# ------------------------------------------------------------------
# criterion 6: second-order self-convergence in the smooth phase
# ------------------------------------------------------------------

@pytest.mark.parametrize("name,component", [("orszag-tang", "rho"), ("sw-orszag-tang", "h")])
def test_criterion_6_self_convergence(name, component):
    rows = run_convergence(name, [50, 100, 200], 0.1, component)
    order = rows[-1].observed_order
    assert order >= 1.7, f"{name}: observed order {order:g} < 1.7"
    print(f"[PASS] criterion 6 ({name}): observed L1 order = {order:.2f} >= 1.7")


# ------------------------------------------------------------------
# criterion 7: Brio-Wu structure and mesh convergence
# ------------------------------------------------------------------

def _density_cut(res):
    k = int(np.argmin(np.abs(res.grid.y_interior)))
    return res.state.interior[0][k, :], res.grid.dx


def _cut_l1(coarse_res, fine_res):
    ccut, cdx = _density_cut(coarse_res)
    fcut, _ = _density_cut(fine_res)
    restricted = 0.5 * (fcut[0::2] + fcut[1::2])
    return float(np.abs(ccut - restricted).sum()) * cdx


def test_criterion_7_brio_wu_structure(tmp_path):
    r400 = run_preset("brio-wu", nx=400, ny=4)
    r800 = run_preset("brio-wu")
    r1600 = run_preset("brio-wu", nx=1600, ny=16)
    # the serialized t=0.2 state carries one row per cell of the 800x8 grid
    from pccu_mhd.snapshots import snapshot_meta, write_snapshot

    snap = tmp_path / "bw.csv"
    write_snapshot(r800.state, r800.grid,
                   snapshot_meta(r800.preset, r800.grid, r800.model, 0.2, 0.25, 1.3),
                   snap, names=r800.model.names)
    rows = [ln for ln in snap.read_text().splitlines()
            if ln and not ln.startswith("#") and not ln.startswith("j,")]
    assert len(rows) == 800 * 8
    d_fine = _cut_l1(r800, r1600)
    d_coarse = _cut_l1(r400, r800)
    assert d_fine <= 2.0 * d_coarse, f"L1(800,1600)={d_fine:g} > 2*L1(400,800)={d_coarse:g}"
    rho = r800.state.interior[0]
    assert rho.min() >= 0.1 and rho.max() <= 1.05, (
        f"density range [{rho.min():g}, {rho.max():g}] outside [0.1, 1.05]")
    assert r800.diag.min_pressure > 0.0
    print(f"[PASS] criterion 7: L1(800,1600) = {d_fine:.3e} <= 2 x {d_coarse:.3e}, "
          f"density in [{rho.min():.3f}, {rho.max():.3f}], pressure positive")


# ------------------------------------------------------------------
# criterion 8: nonconservative closed forms vs adaptive quadrature
# ------------------------------------------------------------------

def _quad_vec(fun, a, b, comps, n):
    out = np.zeros(n)
    for c in comps:
        out[c] = quad(lambda s, c=c: fun(s)[c], a, b, epsabs=1e-14, epsrel=1e-13)[0]
    return out


def _ideal_coeff(wv):
    out = np.zeros(10)
    out[1:8] = [-wv[4], -wv[5], -wv[6], -wv[1], -wv[2], -wv[3],
                -(wv[1] * wv[4] + wv[2] * wv[5] + wv[3] * wv[6])]
    return out


def _sw_coeff(wv):
    return np.array([0.0, -wv[3] / wv[0], -wv[4] / wv[0], -wv[1], -wv[2], 0.0, 0.0])


def test_criterion_8_quadrature_equivalence():
    gen = rng(97)
    states = 0
    # ideal interface + cell
    for wl, wr in zip(random_ideal_w(gen, 150), random_ideal_w(gen, 150)):
        for axis, ni in (("x", 4), ("y", 5)):
            jump = wr[ni] - wl[ni]
            want = _quad_vec(lambda s: _ideal_coeff(wl + s * (wr - wl)) * jump,
                             0.0, 1.0, range(1, 8), 10)
            got = ideal.noncons_interface(wl, wr, axis)
            assert np.abs(got - want).max() <= 1e-10 * max(1.0, np.abs(want).max())
        states += 1
    for w in random_ideal_w(gen, 100):
        slopes = gen.uniform(-2, 2, 10)
        sigma = float(gen.uniform(0, 1))
        for axis, delta in (("x", 0.3), ("y", 0.4)):
            sa = sigma * (w[8] if axis == "x" else w[9])
            eff = slopes.copy()
            eff[4 if axis == "x" else 5] = sa
            want = _quad_vec(lambda xi: _ideal_coeff(w + xi * eff) * sa,
                             -delta / 2, delta / 2, range(1, 8), 10)
            got = ideal.noncons_cell(w, slopes, slopes, sigma, w[8], w[9], 0.3, 0.4, axis)
            assert np.abs(got - want).max() <= 1e-10 * max(1.0, np.abs(want).max())
        states += 1
    # shallow-water interface (log and equal-h branches) + cell
    for i, (wl, wr) in enumerate(zip(random_sw_w(gen, 150), random_sw_w(gen, 150))):
        if i % 2:
            wr[0] = wl[0]  # exercise the averaged branch
        for axis, ni in (("x", 3), ("y", 4)):
            mult = wr[ni] - wl[ni]
            want = _quad_vec(lambda s: _sw_coeff(wl + s * (wr - wl)) * mult,
                             0.0, 1.0, range(1, 5), 7)
            got = sw.sw_noncons_interface(wl, wr, axis)
            assert np.abs(got - want).max() <= 1e-10 * max(1.0, np.abs(want).max())
        states += 1
    for w in random_sw_w(gen, 100, h_lo=0.5, h_hi=5.0):
        slopes = gen.uniform(-1, 1, 7)
        delta = 0.25
        slopes[0] = float(gen.uniform(-0.8, 0.8)) * w[0] / delta
        sigma = float(gen.uniform(0, 1))
        for axis in ("x", "y"):
            sa = sigma * (w[5] if axis == "x" else w[6])
            eff = slopes.copy()
            eff[3 if axis == "x" else 4] = sa
            want = _quad_vec(lambda xi: _sw_coeff(w + xi * eff) * sa,
                             -delta / 2, delta / 2, range(1, 5), 7)
            got = sw.sw_noncons_cell(w, slopes, slopes, sigma, w[5], w[6], delta, delta, axis)
            assert np.abs(got - want).max() <= 1e-10 * max(1.0, np.abs(want).max())
        states += 1
    assert states >= 500  # x2 axes: >= 1000 randomized closed-form checks
    print(f"[PASS] criterion 8: {2 * states} nonconservative closed-form evaluations "
          f"match adaptive quadrature at 1e-10")


# ------------------------------------------------------------------
# criterion 9: unit-level invariant sweep
# ------------------------------------------------------------------

def test_criterion_9_invariant_suite():
    gen = rng(101)
    # minmod algebra
    for _ in range(200):
        args = gen.normal(size=3)
        m = pm.minmod(args)
        assert abs(m) <= np.abs(args).min() + 1e-300
        c = float(gen.uniform(0.1, 4))
        assert pm.minmod(c * args) == pytest.approx(c * m, rel=1e-15, abs=1e-300)
    # gm_slope linear exactness (dyadic)
    assert pm.gm_slope(1.0, 1.125, 1.25, 1.7, 0.25) == 0.5
    # sigma bounds
    for _ in range(200):
        a, b, hx, hy = gen.uniform(-2, 2, 4)
        s = pm.df_scaling(a, b, hx, hy)
        assert 0.0 <= s <= 1.0
        if hx * a > 0 and abs(a) > 1e-10:
            assert abs(s * a) <= abs(hx) * (1 + 1e-15)
    # cu_flux consistency
    f = gen.normal(size=10)
    u = gen.normal(size=10)
    assert np.allclose(pm.cu_flux(f, f, u, u, 1.7, -0.4), f, rtol=4e-16)
    # speed bracketing
    for wl, wr in zip(random_ideal_w(gen, 50), random_ideal_w(gen, 50)):
        sp, sm = ideal.speeds(wl, wr, 1.4, "x")
        assert sm <= 0.0 <= sp
    for wl, wr in zip(random_sw_w(gen, 50), random_sw_w(gen, 50)):
        sp, sm = sw.sw_speeds(wl, wr, 1.0, "y")
        assert sm <= 0.0 <= sp
    # SSP-RK3 order on u' = u
    errs = [abs(pm.ssp_rk3_step(np.array([1.0]), h, lambda q: q)[0] - np.exp(h))
            for h in (0.1, 0.05, 0.025)]
    orders = [np.log2(errs[i] / errs[i + 1]) for i in range(2)]
    assert min(orders) >= 3.9
    # uniform-state fixed point
    grid = pm.build_grid(pm.GridSpec(10, 10, 0, 1, 0, 1))
    state = pm.StateField(grid, 10)
    state.q[0] = 1.0
    state.q[7] = 2.0
    rhs = pm.semidiscrete_rhs(state, pm.IdealMHD(1.4), pm.BoundarySpec.periodic())
    assert np.all(rhs == 0.0)
    print(f"[PASS] criterion 9: invariant suite (minmod, slopes, sigma, cu_flux, "
          f"speed brackets, SSP-RK3 order {min(orders):.2f}, uniform fixed point)")
