"""CFL-driven adaptive time stepping with three-stage SSP Runge-Kutta.

Each Runge-Kutta stage is a convex combination of forward-Euler steps
(Shu-Osher form), so any invariant preserved by an Euler step of the
semi-discrete RHS -- in particular the cell-wise A + B = 0 identity -- is
preserved by the full step.  One dt per step; speeds are not re-estimated
between stages.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, NumericsError, StagnationError
from .grid import StateField
from .limiter import THETA_DEFAULT
from .pccu import rhs_with_bound


@dataclass(frozen=True)
class TimeParams:
    """Courant number, end time, and the stagnation threshold."""

    t_final: float
    cfl: float = 0.25
    dt_min: float | None = None

    def __post_init__(self):
        if not 0.0 < self.cfl < 1.0:
            raise ConfigurationError(f"cfl must lie in (0, 1), got {self.cfl}")
        if self.t_final < 0.0:
            raise ConfigurationError(f"t_final must be nonnegative, got {self.t_final}")

    @property
    def dt_floor(self) -> float:
        if self.dt_min is not None:
            return self.dt_min
        return 1e-14 * self.t_final


def compute_dt(state, model, bc, params: TimeParams, t: float,
               theta: float = THETA_DEFAULT, backend=None) -> float:
    """CFL time step from face-reconstructed speeds of the current state,
    clipped so the final step lands exactly on t_final."""
    _, bound = rhs_with_bound(state, model, bc, theta=theta, backend=backend)
    return _clip_dt(params.cfl * bound, params, t, params.t_final)


def _clip_dt(dt_raw: float, params: TimeParams, t: float, target: float) -> float:
    if not np.isfinite(dt_raw):
        # no propagating waves at all; jump to the target directly
        return target - t
    if dt_raw < params.dt_floor:
        raise StagnationError(
            f"time step {dt_raw:g} fell below dt_min {params.dt_floor:g} at t={t:g}"
        )
    return min(dt_raw, target - t)


def ssp_rk3_step(u: np.ndarray, dt: float, rhs_op, first_rhs: np.ndarray | None = None):
    """One SSP-RK3 step of u' = rhs_op(u) on a plain array.

    ``first_rhs`` may pass in an already-evaluated rhs_op(u) (the CFL
    estimate needs one anyway).  Aborts with the stage index on NaN.
    """
    u = np.asarray(u, dtype=float)
    k1 = rhs_op(u) if first_rhs is None else first_rhs
    u1 = u + dt * k1
    _check_stage(u1, 1)
    u2 = 0.75 * u + 0.25 * (u1 + dt * rhs_op(u1))
    _check_stage(u2, 2)
    u3 = (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs_op(u2))
    _check_stage(u3, 3)
    return u3


def _check_stage(u, stage: int) -> None:
    if np.isnan(u).any():
        raise NumericsError(f"NaN detected in SSP-RK3 stage {stage}")


@dataclass
class StepRecord:
    t: float
    dt: float


@dataclass
class StepLog:
    steps: list = field(default_factory=list)

    def append(self, t: float, dt: float) -> None:
        self.steps.append(StepRecord(t, dt))

    @property
    def times(self):
        return [s.t for s in self.steps]

    def __len__(self):
        return len(self.steps)


def integrate(state: StateField, model, bc, params: TimeParams,
              theta: float = THETA_DEFAULT, backend=None,
              snapshot_times=(), on_snapshot=None,
              diag_interval: int = 0, on_sample=None,
              max_steps: int = 1_000_000, check_divergence: bool = False):
    """Advance the state to t_final, hitting every snapshot time exactly.

    ``on_snapshot(t, state)`` fires at each requested time (and only
    those); ``on_sample(t, state)`` fires at t=0, every ``diag_interval``
    steps, at snapshot times, and at the final time.  Returns the final
    state and the step log.  ``check_divergence`` asserts the discrete
    A + B = 0 identity after every accepted step (debug runs).
    """
    grid = state.grid
    t_final = params.t_final
    for ts in snapshot_times:
        if not 0.0 <= ts <= t_final:
            raise ConfigurationError(f"snapshot time {ts} outside [0, {t_final}]")
    targets = sorted(set(float(ts) for ts in snapshot_times))
    snapshot_set = set(targets)
    if on_snapshot is not None and 0.0 in snapshot_set:
        on_snapshot(0.0, state)
    targets = [ts for ts in targets if ts > 0.0]
    if t_final not in targets:
        targets.append(t_final)

    work = StateField(grid, state.ncomp, state.q)

    def rhs_arr(qarr):
        work.q = qarr
        rhs, _ = rhs_with_bound(work, model, bc, theta=theta, backend=backend)
        return rhs

    log = StepLog()
    if on_sample is not None:
        on_sample(0.0, state)
    t = 0.0
    step = 0
    while t < t_final:
        if step >= max_steps:
            raise NumericsError(f"exceeded max_steps={max_steps} at t={t:g}")
        work.q = state.q
        rhs1, bound = rhs_with_bound(work, model, bc, theta=theta, backend=backend)
        next_target = targets[0]
        gap = next_target - t
        raw = params.cfl * bound
        if np.isfinite(raw) and raw < params.dt_floor:
            raise StagnationError(
                f"time step {raw:g} fell below dt_min {params.dt_floor:g} at t={t:g}"
            )
        if not np.isfinite(raw) or raw >= gap:
            dt, hit = gap, True
        else:
            dt = raw
            # rounding of t + dt may graze the target; land on it exactly
            hit = t + dt >= next_target
        state.q = ssp_rk3_step(state.q, dt, rhs_arr, first_rhs=rhs1)
        t = next_target if hit else t + dt
        step += 1
        log.append(t, dt)
        if hit:
            targets.pop(0)
            if on_snapshot is not None and next_target in snapshot_set:
                on_snapshot(t, state)
        if check_divergence:
            from .diagnostics import divergence_residual

            resid = divergence_residual(state)
            if resid > 1e-12 + 1e-14 * step:
                raise NumericsError(
                    f"divergence identity violated: max|A+B| = {resid:g} after step {step}"
                )
        if on_sample is not None and (
            (diag_interval and step % diag_interval == 0) or hit or t == t_final
        ):
            on_sample(t, state)
    return state, log
