"""Self-convergence studies on doubling grids.

Runs one problem on a list of resolutions, restricts each finer solution
onto the next coarser grid by 2x2 cell aggregation, and reports L1
differences with observed orders log2(d_coarse / d_fine).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagnostics import l1_difference, restrict_2x2
from .errors import ConfigurationError
from .problems import make_problem, setup_run
from .timestepping import TimeParams, integrate


@dataclass(frozen=True)
class ConvergenceRow:
    nx_coarse: int
    nx_fine: int
    l1_diff: float
    observed_order: float  # nan on the first pair


def run_convergence(problem: str, nx_list, t_final: float, component: str,
                    cfl: float = 0.25, theta: float = 1.3, backend=None,
                    max_steps: int = 1_000_000):
    """L1 self-differences and observed orders for >= 3 doubling grids."""
    nx_list = [int(n) for n in nx_list]
    if len(nx_list) < 3:
        raise ConfigurationError("convergence study needs at least 3 grids")
    for a, b in zip(nx_list, nx_list[1:]):
        if b != 2 * a:
            raise ConfigurationError(f"grid list must double: {a} -> {b}")
    preset = make_problem(problem)
    fields = []
    meshes = []
    for nx in nx_list:
        if (nx * preset.ny) % preset.nx:
            raise ConfigurationError(
                f"nx={nx} does not scale the default aspect {preset.nx}x{preset.ny}"
            )
        ny = max(1, nx * preset.ny // preset.nx)
        _, grid, model, state = setup_run(problem, nx=nx, ny=ny)
        if component not in model.names:
            raise ConfigurationError(
                f"unknown component {component!r}; available: {', '.join(model.names)}"
            )
        params = TimeParams(t_final=t_final, cfl=cfl)
        integrate(state, model, preset.bc, params, theta=theta, backend=backend,
                  max_steps=max_steps)
        ci = model.names.index(component)
        fields.append(state.interior[ci].copy())
        meshes.append(grid)
    rows = []
    diffs = []
    for i in range(len(nx_list) - 1):
        coarse, fine = fields[i], restrict_2x2(fields[i + 1])
        d = l1_difference(coarse, fine, meshes[i].dx, meshes[i].dy)
        order = float("nan")
        if diffs:
            order = math.log2(diffs[-1] / d) if d > 0 else float("inf")
        diffs.append(d)
        rows.append(ConvergenceRow(nx_list[i], nx_list[i + 1], d, order))
    return rows


def write_convergence_csv(rows, path) -> None:
    with open(path, "w", newline="\n") as f:
        f.write("nx_coarse,nx_fine,l1_diff,observed_order\n")
        for r in rows:
            f.write(f"{r.nx_coarse},{r.nx_fine},{r.l1_diff:.16e},{r.observed_order:.6f}\n")
