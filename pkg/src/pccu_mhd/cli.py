"""Command-line driver.

Subcommands: ``run``, ``convergence``, ``list-problems``.  Exit codes:
0 success, 2 usage/configuration, 3 numerical failure, 4 I/O.

``run`` accepts a flat ``key = value`` config file (`#` comments, no
nesting); explicit flags override file values, which override preset
defaults.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import _backend
from .convergence import run_convergence, write_convergence_csv
from .diagnostics import DiagnosticsLog
from .errors import ConfigurationError, NumericsError, PccuError, ShapeError
from .problems import PROBLEM_NAMES, make_problem, setup_run
from .snapshots import snapshot_meta, write_line_cut, write_snapshot
from .timestepping import TimeParams, integrate

_CONFIG_KEYS = {
    "problem", "nx", "ny", "cfl", "theta", "t_final", "snapshots",
    "outdir", "diag_interval", "backend", "cut", "cut_components",
}


@dataclass
class RunConfig:
    problem: str
    nx: int | None = None
    ny: int | None = None
    cfl: float = 0.25
    theta: float = 1.3
    t_final: float | None = None
    snapshot_times: list = field(default_factory=list)
    outdir: str = "out"
    diag_interval: int = 10
    backend: str = "auto"
    cut: str | None = None
    cut_components: list | None = None

    def __post_init__(self):
        for name in ("nx", "ny"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ConfigurationError(f"{name} must be positive, got {v}")
        if not 0.0 < self.cfl < 1.0:
            raise ConfigurationError(f"cfl must lie in (0, 1), got {self.cfl}")
        if not 1.0 <= self.theta <= 2.0:
            raise ConfigurationError(f"theta must lie in [1, 2], got {self.theta}")
        if self.diag_interval < 0:
            raise ConfigurationError("diag_interval must be nonnegative")


def _parse_times(text: str):
    text = text.strip()
    if not text:
        return []
    try:
        return [float(tok) for tok in text.replace(";", ",").split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigurationError(f"bad snapshot time list {text!r}") from exc


def _read_config_file(path: str) -> dict:
    values: dict = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = val
    return values


def parse_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags over config-file values over defaults into a RunConfig."""
    file_vals = _read_config_file(args.config) if args.config else {}

    def pick(flag_val, key, conv=str):
        if flag_val is not None:
            return flag_val
        if key in file_vals:
            try:
                return conv(file_vals[key])
            except ValueError as exc:
                raise ConfigurationError(f"bad value for {key!r}: {file_vals[key]!r}") from exc
        return None

    problem = pick(args.problem, "problem")
    if problem is None:
        raise ConfigurationError("a problem name is required (flag --problem or config file)")
    make_problem(problem)  # validate early
    def pick_or(flag_val, key, default, conv=str):
        val = pick(flag_val, key, conv)
        return default if val is None else val

    snaps = pick(args.snapshots, "snapshots")
    cut_comps = pick(args.cut_components, "cut_components")
    cfg = RunConfig(
        problem=problem,
        nx=pick(args.nx, "nx", int),
        ny=pick(args.ny, "ny", int),
        cfl=pick_or(args.cfl, "cfl", 0.25, float),
        theta=pick_or(args.theta, "theta", 1.3, float),
        t_final=pick(args.t_final, "t_final", float),
        snapshot_times=_parse_times(snaps) if snaps else [],
        outdir=pick_or(args.outdir, "outdir", "out"),
        diag_interval=pick_or(args.diag_interval, "diag_interval", 10, int),
        backend=pick_or(args.backend, "backend", "auto"),
        cut=pick(args.cut, "cut"),
        cut_components=[c.strip() for c in cut_comps.split(",")] if cut_comps else None,
    )
    return cfg


def snapshot_path(outdir: Path, problem: str, nx: int, ny: int, t: float) -> Path:
    return outdir / f"{problem}_nx{nx}_ny{ny}_t{t:.6g}.csv"


def _parse_cut(spec: str):
    spec = spec.strip()
    if "=" not in spec:
        raise ConfigurationError(f"cut must look like 'y=0' or 'x=0.5', got {spec!r}")
    fixed_axis, _, coord = spec.partition("=")
    fixed_axis = fixed_axis.strip().lower()
    if fixed_axis not in ("x", "y"):
        raise ConfigurationError(f"cut axis must be x or y, got {fixed_axis!r}")
    try:
        coordinate = float(coord)
    except ValueError as exc:
        raise ConfigurationError(f"bad cut coordinate {coord!r}") from exc
    # the cut runs along the other axis
    return ("y" if fixed_axis == "x" else "x"), coordinate


def cmd_run(args) -> int:
    cfg = parse_config(args)
    _backend.resolve_backend(cfg.backend)
    preset, grid, model, state = setup_run(cfg.problem, nx=cfg.nx, ny=cfg.ny)
    t_final = cfg.t_final if cfg.t_final is not None else preset.t_final
    params = TimeParams(t_final=t_final, cfl=cfg.cfl)
    outdir = Path(cfg.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    diag = DiagnosticsLog(model, path=outdir / f"{cfg.problem}_nx{grid.nx}_ny{grid.ny}_diag.log")

    def writer(t, st):
        meta = snapshot_meta(preset, grid, model, t, cfg.cfl, cfg.theta)
        write_snapshot(st, grid, meta, snapshot_path(outdir, cfg.problem, grid.nx, grid.ny, t),
                       names=model.names)

    times = sorted(set(cfg.snapshot_times) | {t_final})
    state, log = integrate(
        state, model, preset.bc, params, theta=cfg.theta,
        backend=cfg.backend if cfg.backend != "auto" else None,
        snapshot_times=times, on_snapshot=writer,
        diag_interval=cfg.diag_interval, on_sample=diag.sample,
    )
    if cfg.cut:
        axis, coordinate = _parse_cut(cfg.cut)
        comps = cfg.cut_components or list(model.names)
        cut_file = outdir / f"{cfg.problem}_nx{grid.nx}_ny{grid.ny}_cut.csv"
        write_line_cut(state, grid, axis, coordinate, comps, cut_file, model.names)
    print(
        f"{cfg.problem}: {len(log)} steps to t={t_final:g} on {grid.nx}x{grid.ny} "
        f"[{_backend.resolve_backend(cfg.backend)} backend], "
        f"max|A+B|={diag.max_divergence:.3e}"
    )
    return 0


def cmd_convergence(args) -> int:
    grids = [int(tok) for tok in args.grids.split(",") if tok.strip()]
    rows = run_convergence(args.problem, grids, args.t_final, args.component,
                           cfl=args.cfl, theta=args.theta,
                           backend=args.backend if args.backend != "auto" else None)
    out = Path(args.out) if args.out else None
    if out:
        out.parent.mkdir(parents=True, exist_ok=True)
        write_convergence_csv(rows, out)
    print("nx_coarse  nx_fine  l1_diff        observed_order")
    for r in rows:
        print(f"{r.nx_coarse:9d}  {r.nx_fine:7d}  {r.l1_diff:.6e}  {r.observed_order:.3f}")
    return 0


def cmd_list_problems(args) -> int:
    for name in PROBLEM_NAMES:
        p = make_problem(name)
        par = f"gamma={p.gamma:g}" if p.system == "ideal" else f"g={p.g:g}"
        print(f"{name:16s} {p.system:6s} {p.nx}x{p.ny}  t_final={p.t_final:g}  {par}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pccu-mhd", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="integrate one benchmark problem")
    run.add_argument("--problem", choices=PROBLEM_NAMES)
    run.add_argument("--config", help="flat key = value config file")
    run.add_argument("--nx", type=int)
    run.add_argument("--ny", type=int)
    run.add_argument("--cfl", type=float)
    run.add_argument("--theta", type=float)
    run.add_argument("--t-final", dest="t_final", type=float)
    run.add_argument("--snapshots", help="comma-separated snapshot times")
    run.add_argument("--outdir")
    run.add_argument("--diag-interval", dest="diag_interval", type=int)
    run.add_argument("--backend", choices=("auto", "cython", "python"))
    run.add_argument("--cut", help="line cut of the final state, e.g. y=0")
    run.add_argument("--cut-components", dest="cut_components",
                     help="comma-separated components for --cut (default: all)")
    run.set_defaults(func=cmd_run)

    conv = sub.add_parser("convergence", help="self-convergence study on doubling grids")
    conv.add_argument("--problem", required=True, choices=PROBLEM_NAMES)
    conv.add_argument("--grids", required=True, help="comma-separated nx list, e.g. 50,100,200")
    conv.add_argument("--t-final", dest="t_final", type=float, required=True)
    conv.add_argument("--component", required=True)
    conv.add_argument("--cfl", type=float, default=0.25)
    conv.add_argument("--theta", type=float, default=1.3)
    conv.add_argument("--backend", choices=("auto", "cython", "python"), default="auto")
    conv.add_argument("--out", help="write the table to this CSV file")
    conv.set_defaults(func=cmd_convergence)

    lp = sub.add_parser("list-problems", help="list available problem presets")
    lp.set_defaults(func=cmd_list_problems)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericsError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    except PccuError as exc:  # anything else solver-specific is a usage issue
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
