"""Shared helpers: randomized admissible states and small preset runs."""

from __future__ import annotations

import numpy as np
import pytest

import pccu_mhd as pm


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_ideal_w(gen, n=1):
    """Random admissible ideal-MHD reconstruction states, shape (n, 10)."""
    w = np.empty((n, 10))
    w[:, 0] = gen.uniform(0.1, 10.0, n)          # rho
    w[:, 1:4] = gen.uniform(-3.0, 3.0, (n, 3))   # u, v, w
    w[:, 4:7] = gen.uniform(-3.0, 3.0, (n, 3))   # b
    w[:, 7] = gen.uniform(0.01, 10.0, n)         # p
    w[:, 8] = gen.uniform(-2.0, 2.0, n)          # A
    w[:, 9] = gen.uniform(-2.0, 2.0, n)          # B
    return w


def random_sw_w(gen, n=1, h_lo=0.1, h_hi=5.0):
    """Random admissible SW-MHD reconstruction states, shape (n, 7)."""
    w = np.empty((n, 7))
    w[:, 0] = gen.uniform(h_lo, h_hi, n)         # h
    w[:, 1:3] = gen.uniform(-3.0, 3.0, (n, 2))   # u, v
    w[:, 3:5] = gen.uniform(-3.0, 3.0, (n, 2))   # ha, hb
    w[:, 5] = gen.uniform(-2.0, 2.0, n)          # A
    w[:, 6] = gen.uniform(-2.0, 2.0, n)          # B
    return w


def smooth_random_state(model, grid, gen, div_consistent=True):
    """Smooth positive random field with A + B = 0 when requested."""
    xx, yy = np.meshgrid(grid.x_interior, grid.y_interior)
    lx = grid.xmax - grid.xmin
    ly = grid.ymax - grid.ymin

    def wave(lo, hi):
        a, b, c = gen.uniform(-1, 1, 3)
        f = a * np.sin(2 * np.pi * (xx - grid.xmin) / lx + c) + b * np.cos(
            2 * np.pi * (yy - grid.ymin) / ly
        )
        return lo + (hi - lo) * (f - f.min() + 0.1) / (f.max() - f.min() + 0.2)

    state = pm.StateField(grid, model.ncomp)
    sk, sj = grid.interior
    if model.kind == "ideal":
        rho = wave(0.5, 2.0)
        u, v, w = (wave(-0.5, 0.5) for _ in range(3))
        b1, b2, b3 = (wave(-0.8, 0.8) for _ in range(3))
        p = wave(0.5, 2.0)
        a_div = wave(-0.3, 0.3)
        q = state.q
        q[0][sk, sj] = rho
        q[1][sk, sj] = rho * u
        q[2][sk, sj] = rho * v
        q[3][sk, sj] = rho * w
        q[4][sk, sj] = b1
        q[5][sk, sj] = b2
        q[6][sk, sj] = b3
        q[7][sk, sj] = (
            p / (model.gamma - 1) + 0.5 * rho * (u**2 + v**2 + w**2)
            + 0.5 * (b1**2 + b2**2 + b3**2)
        )
        q[8][sk, sj] = a_div
        q[9][sk, sj] = -a_div if div_consistent else wave(-0.3, 0.3)
    else:
        h = wave(0.5, 2.0)
        u, v = wave(-0.5, 0.5), wave(-0.5, 0.5)
        ha, hb = wave(-0.8, 0.8), wave(-0.8, 0.8)
        a_div = wave(-0.3, 0.3)
        q = state.q
        q[0][sk, sj] = h
        q[1][sk, sj] = h * u
        q[2][sk, sj] = h * v
        q[3][sk, sj] = ha
        q[4][sk, sj] = hb
        q[5][sk, sj] = a_div
        q[6][sk, sj] = -a_div if div_consistent else wave(-0.3, 0.3)
    return state


@pytest.fixture
def periodic_bc():
    return pm.BoundarySpec.periodic()


@pytest.fixture
def small_grid():
    return pm.build_grid(pm.GridSpec(12, 10, 0.0, 1.0, -0.5, 0.5))
