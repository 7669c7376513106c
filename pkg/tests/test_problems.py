import numpy as np
import pytest

import pccu_mhd as pm
from pccu_mhd.errors import ConfigurationError
from pccu_mhd.problems import _PRESETS


def test_unknown_problem_lists_names():
    with pytest.raises(ConfigurationError, match="brio-wu"):
        pm.make_problem("nope")


def test_preset_table():
    bw = pm.make_problem("brio-wu")
    assert (bw.gamma, bw.t_final, bw.nx, bw.ny) == (2.0, 0.2, 800, 8)
    assert (bw.xmin, bw.xmax, bw.ymin, bw.ymax) == (-1.0, 1.0, -0.01, 0.01)
    ot = pm.make_problem("orszag-tang")
    assert ot.gamma == pytest.approx(5.0 / 3.0)
    assert ot.xmax == pytest.approx(2 * np.pi)
    assert pm.make_problem("rotor").t_final == 0.295
    bl = pm.make_problem("blast")
    assert bl.gamma == 1.4 and bl.t_final == 0.01
    assert pm.make_problem("sw-orszag-tang").t_final == 2.0
    assert pm.make_problem("sw-rotor").t_final == 0.2
    assert pm.make_problem("sw-explosion").t_final == 0.25
    for name in ("sw-orszag-tang", "sw-rotor", "sw-explosion"):
        assert pm.make_problem(name).g == 1.0


def test_brio_wu_pointwise():
    f = _PRESETS["brio-wu"].init
    rho, u, v, w, b1, b2, b3, p = [np.asarray(a) for a in f(np.array(-0.5), np.array(0.0))]
    assert (rho, b2, p) == (1.0, 1.0, 1.0)
    rho, _, _, _, b1, b2, _, p = f(np.array(0.5), np.array(0.0))
    assert (rho, b1, b2, p) == (0.125, 0.75, -1.0, 0.1)


def test_orszag_tang_pointwise():
    f = _PRESETS["orszag-tang"].init
    rho = f(np.array(1.23), np.array(4.56))[0]
    assert rho == pytest.approx(25.0 / 9.0, rel=1e-15)


def test_rotor_taper_and_region_edges():
    f = _PRESETS["rotor"].init
    # lambda = 0.5 at r = 0.1075 (point above center: u = -0.5, v = 0)
    rho, u, v = f(np.array(0.5), np.array(0.5 + 0.1075))[:3]
    assert rho == pytest.approx(5.5, rel=1e-12)
    assert u == pytest.approx(0.5 * (0.5 - (0.5 + 0.1075)) / 0.1075, rel=1e-12)
    assert v == pytest.approx(0.0, abs=1e-15)
    # taper edges are continuous with both neighbors
    rho_in = f(np.array(0.5 + 0.1), np.array(0.5))[0]
    assert rho_in == pytest.approx(10.0, rel=1e-12)
    rho_out = f(np.array(0.5 + 0.115), np.array(0.5))[0]
    assert rho_out == pytest.approx(1.0, rel=1e-12)
    # strict disk interior
    assert f(np.array(0.5 + 0.0999), np.array(0.5))[0] == 10.0
    assert f(np.array(0.5 + 0.116), np.array(0.5))[0] == 1.0


def test_blast_pressure_regions():
    f = _PRESETS["blast"].init
    assert f(np.array(0.05), np.array(0.05))[7] == 1000.0
    assert f(np.array(0.3), np.array(0.0))[7] == 0.1
    assert f(np.array(0.0), np.array(0.0))[4] == pytest.approx(100.0 / np.sqrt(4 * np.pi))


def test_sw_rotor_conserved_magnetic_data():
    f = _PRESETS["sw-rotor"].init
    h, u, v, ha, hb = f(np.array(0.05), np.array(0.0))
    assert (h, ha, hb) == (10.0, 1.0, 0.0)
    assert (u, v) == (0.0, 0.05)
    h, u, v, ha, hb = f(np.array(0.5), np.array(0.5))
    assert (h, u, v, ha, hb) == (1.0, 0.0, 0.0, 1.0, 0.0)


def test_sw_explosion_uniform_ha():
    f = _PRESETS["sw-explosion"].init
    h_in, _, _, ha_in, hb_in = f(np.array(0.1), np.array(0.0))
    h_out, _, _, ha_out, hb_out = f(np.array(0.9), np.array(0.0))
    assert (h_in, h_out) == (1.0, 0.1)
    assert ha_in == pytest.approx(0.1) and ha_out == pytest.approx(0.1)
    assert hb_in == 0.0 and hb_out == 0.0


@pytest.mark.parametrize("name", pm.PROBLEM_NAMES)
def test_initial_magnetic_divergence_vanishes_pointwise(name):
    """Central differences of the analytic normal magnetic fields are zero."""
    preset = pm.make_problem(name)
    grid = pm.build_grid(preset.grid_spec(24, 24))
    xx, yy = np.meshgrid(grid.x_interior, grid.y_interior)
    vals = _PRESETS[name].init(xx, yy)
    if preset.system == "ideal":
        bx, by = vals[4], vals[5]
    else:
        h = vals[0]
        bx, by = vals[3], vals[4]
    ddx = (bx[:, 2:] - bx[:, :-2]) / (2 * grid.dx)
    ddy = (by[2:, :] - by[:-2, :]) / (2 * grid.dy)
    assert np.abs(ddx).max() <= 1e-12
    assert np.abs(ddy).max() <= 1e-12


@pytest.mark.parametrize("name", pm.PROBLEM_NAMES)
def test_initial_state_positive_and_div_free(name):
    preset, grid, model, state = pm.setup_run(name, nx=20, ny=20)
    assert pm.divergence_residual(state) == 0.0
    mn, mp = pm.positivity_report(state, model)
    assert mn > 0.0
    if preset.system == "ideal":
        assert mp > 0.0
