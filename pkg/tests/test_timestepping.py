import numpy as np
import pytest

import pccu_mhd as pm
from pccu_mhd.errors import ConfigurationError, NumericsError, StagnationError


def _uniform_sound_state(nx, ny, dx_domain=1.0):
    """Uniform ideal state with unit fast speed (gamma p / rho = 1, b = 0)."""
    grid = pm.build_grid(pm.GridSpec(nx, ny, 0.0, dx_domain, 0.0, dx_domain))
    state = pm.StateField(grid, 10)
    state.q[0] = 1.0
    state.q[7] = 0.5 / (2.0 - 1.0)  # p = 0.5, gamma = 2
    model = pm.IdealMHD(2.0)
    return grid, model, state


def test_time_params_validation():
    with pytest.raises(ConfigurationError):
        pm.TimeParams(t_final=1.0, cfl=0.0)
    with pytest.raises(ConfigurationError):
        pm.TimeParams(t_final=-1.0)


def test_compute_dt_bound_arithmetic():
    grid, model, state = _uniform_sound_state(100, 100)
    params = pm.TimeParams(t_final=10.0, cfl=0.25)
    dt = pm.compute_dt(state, model, pm.BoundarySpec.periodic(), params, t=0.0)
    # speeds are exactly 1, dx = dy = 0.01
    assert dt == pytest.approx(0.0025, rel=1e-14)
    assert dt >= 0.0025 * (1 - 1e-14)


def test_compute_dt_clipping():
    grid, model, state = _uniform_sound_state(10, 10)
    params = pm.TimeParams(t_final=1.0)
    t = 1.0 - 1e-6
    dt = pm.compute_dt(state, model, pm.BoundarySpec.periodic(), params, t=t)
    assert dt == 1.0 - t


def test_compute_dt_halves_with_resolution():
    _, model, coarse = _uniform_sound_state(20, 20)
    _, _, fine = _uniform_sound_state(40, 40)
    params = pm.TimeParams(t_final=100.0)
    bc = pm.BoundarySpec.periodic()
    dt_c = pm.compute_dt(coarse, model, bc, params, t=0.0)
    dt_f = pm.compute_dt(fine, model, bc, params, t=0.0)
    assert dt_f == pytest.approx(dt_c / 2.0, rel=1e-14)


def test_ssp_rk3_identity_and_constant_rhs():
    u = np.array([2.0, -1.0])
    assert np.array_equal(pm.ssp_rk3_step(u, 0.1, lambda q: np.zeros_like(q)), u)
    out = pm.ssp_rk3_step(u, 0.1, lambda q: np.ones_like(q))
    assert np.allclose(out, u + 0.1, rtol=1e-15)


def test_ssp_rk3_linear_growth_third_order_value():
    out = pm.ssp_rk3_step(np.array([1.0]), 0.1, lambda q: q)
    want = 1.0 + 0.1 + 0.1**2 / 2.0 + 0.1**3 / 6.0
    assert out[0] == pytest.approx(want, rel=1e-15)


def test_ssp_rk3_observed_order():
    errs = []
    for h in (0.1, 0.05, 0.025):
        out = pm.ssp_rk3_step(np.array([1.0]), h, lambda q: q)
        errs.append(abs(out[0] - np.exp(h)))
    orders = [np.log2(errs[i] / errs[i + 1]) for i in range(2)]
    assert min(orders) >= 3.9


def test_ssp_rk3_nan_abort_reports_stage():
    def bad(q):
        return np.full_like(q, np.nan)

    with pytest.raises(NumericsError, match="stage 1"):
        pm.ssp_rk3_step(np.array([1.0]), 0.1, bad)


def test_integrate_zero_time_and_uniform_fixed_point():
    grid, model, state = _uniform_sound_state(8, 8)
    bc = pm.BoundarySpec.periodic()
    snap = state.q.copy()
    out, log = pm.integrate(state, model, bc, pm.TimeParams(t_final=0.0))
    assert len(log) == 0
    assert np.array_equal(out.q, snap)

    grid, model, state = _uniform_sound_state(8, 8)
    out, log = pm.integrate(state, model, bc, pm.TimeParams(t_final=0.3))
    assert len(log) > 0
    assert np.array_equal(out.interior, snap[:, grid.ng:-grid.ng, grid.ng:-grid.ng])


def test_integrate_step_log_and_exact_final_time():
    preset, grid, model, state = pm.setup_run("orszag-tang", nx=24, ny=24)
    t_final = 0.21
    state, log = pm.integrate(state, model, preset.bc, pm.TimeParams(t_final=t_final))
    times = log.times
    assert all(b > a for a, b in zip(times, times[1:]))
    assert times[-1] == t_final  # bitwise


def test_integrate_hits_snapshot_times_exactly():
    preset, grid, model, state = pm.setup_run("orszag-tang", nx=16, ny=16)
    seen = []
    pm.integrate(
        state, model, preset.bc, pm.TimeParams(t_final=0.2),
        snapshot_times=[0.05, 0.125, 0.2],
        on_snapshot=lambda t, st: seen.append(t),
    )
    assert seen == [0.05, 0.125, 0.2]


def test_integrate_snapshot_time_validation():
    preset, grid, model, state = pm.setup_run("orszag-tang", nx=8, ny=8)
    with pytest.raises(ConfigurationError):
        pm.integrate(state, model, preset.bc, pm.TimeParams(t_final=0.1),
                     snapshot_times=[0.5])


def test_integrate_stagnation_and_max_steps():
    preset, grid, model, state = pm.setup_run("orszag-tang", nx=8, ny=8)
    with pytest.raises(StagnationError):
        pm.integrate(state, model, preset.bc,
                     pm.TimeParams(t_final=1.0, dt_min=1.0))
    preset, grid, model, state = pm.setup_run("orszag-tang", nx=8, ny=8)
    with pytest.raises(NumericsError, match="max_steps"):
        pm.integrate(state, model, preset.bc, pm.TimeParams(t_final=1.0), max_steps=2)


def test_integrate_preserves_divergence_identity():
    for name in ("orszag-tang", "sw-orszag-tang"):
        preset, grid, model, state = pm.setup_run(name, nx=24, ny=24)
        state, _ = pm.integrate(state, model, preset.bc, pm.TimeParams(t_final=0.05),
                                check_divergence=True)
        assert pm.divergence_residual(state) <= 1e-12
