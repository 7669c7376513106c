"""Snapshot and line-cut serialization.

Snapshots are plain text: `#`-prefixed `key=value` header lines, a column
header row ``j,k,x,y,<components...>``, then one row per interior cell in
row-major order (k outer, j inner).  All floats use decimal scientific
notation with 17 significant digits, which round-trips 64-bit binary
exactly; line endings are LF.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError, ShapeError
from .grid import Grid, StateField

_FMT = ".16e"


def _fmt(v: float) -> str:
    return format(float(v), _FMT)


def snapshot_meta(preset, grid: Grid, model, t: float, cfl: float, theta: float) -> dict:
    meta = {
        "problem": preset.name,
        "system": preset.system,
        "time": t,
        "nx": grid.nx,
        "ny": grid.ny,
        "xmin": grid.xmin,
        "xmax": grid.xmax,
        "ymin": grid.ymin,
        "ymax": grid.ymax,
        "cfl": cfl,
        "theta": theta,
    }
    if preset.system == "ideal":
        meta["gamma"] = model.gamma
    else:
        meta["g"] = model.g
    return meta


def write_snapshot(state: StateField, grid: Grid, meta: dict, path, names=None) -> None:
    """Serialize the interior of ``state`` plus metadata to ``path``."""
    q = state.interior
    if not np.isfinite(q).all():
        raise ShapeError("refusing to snapshot a non-finite state")
    names = list(names if names is not None else [f"q{i}" for i in range(state.ncomp)])
    if len(names) != state.ncomp:
        raise ShapeError(f"{len(names)} component names for {state.ncomp} components")
    lines = []
    for key, val in meta.items():
        sval = _fmt(val) if isinstance(val, float) else str(val)
        lines.append(f"# {key}={sval}")
    lines.append("# components=" + ",".join(names))
    lines.append("j,k,x,y," + ",".join(names))
    xs, ys = grid.x_interior, grid.y_interior
    for k in range(grid.ny):
        yk = _fmt(ys[k])
        for j in range(grid.nx):
            row = [str(j), str(k), _fmt(xs[j]), yk]
            row.extend(_fmt(q[c, k, j]) for c in range(state.ncomp))
            lines.append(",".join(row))
    with open(path, "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")


def read_snapshot(path):
    """Parse a snapshot file; returns (meta dict, component dict of (ny, nx)
    arrays including 'x' and 'y' center coordinate vectors)."""
    meta: dict = {}
    with open(path) as f:
        line = f.readline()
        while line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            meta[key.strip()] = val.strip()
            line = f.readline()
        header = line.strip().split(",")
        data = np.loadtxt(f, delimiter=",", ndmin=2)
    for key in ("time", "xmin", "xmax", "ymin", "ymax", "cfl", "theta", "gamma", "g"):
        if key in meta:
            meta[key] = float(meta[key])
    for key in ("nx", "ny"):
        meta[key] = int(meta[key])
    nx, ny = meta["nx"], meta["ny"]
    if data.shape[0] != nx * ny:
        raise ShapeError(f"snapshot has {data.shape[0]} rows, expected {nx * ny}")
    fields = {}
    for col, name in enumerate(header):
        if name in ("j", "k"):
            continue
        grid_col = data[:, col].reshape(ny, nx)
        if name == "x":
            fields["x"] = grid_col[0, :]
        elif name == "y":
            fields["y"] = grid_col[:, 0]
        else:
            fields[name] = grid_col
    meta["components"] = meta.get("components", "").split(",")
    return meta, fields


def write_line_cut(state: StateField, grid: Grid, axis: str, coordinate: float,
                   components, path, names) -> None:
    """CSV cut through the row/column of cells nearest to ``coordinate``.

    ``axis`` is the direction the cut runs along: 'x' extracts the k-row
    whose center is nearest the fixed y=coordinate and writes ``x,<comps>``;
    'y' is the transpose.
    """
    names = list(names)
    comp_idx = []
    for c in components:
        if c not in names:
            raise ConfigurationError(f"unknown component {c!r}; available: {', '.join(names)}")
        comp_idx.append(names.index(c))
    q = state.interior
    if axis == "x":
        if not grid.ymin <= coordinate <= grid.ymax:
            raise ConfigurationError(
                f"cut coordinate y={coordinate} outside [{grid.ymin}, {grid.ymax}]"
            )
        k = int(np.argmin(np.abs(grid.y_interior - coordinate)))
        abscissa, values = grid.x_interior, q[:, k, :]
    elif axis == "y":
        if not grid.xmin <= coordinate <= grid.xmax:
            raise ConfigurationError(
                f"cut coordinate x={coordinate} outside [{grid.xmin}, {grid.xmax}]"
            )
        j = int(np.argmin(np.abs(grid.x_interior - coordinate)))
        abscissa, values = grid.y_interior, q[:, :, j]
    else:
        raise ConfigurationError(f"axis must be 'x' or 'y', got {axis!r}")
    lines = [axis + "," + ",".join(components)]
    for i in range(abscissa.size):
        row = [_fmt(abscissa[i])]
        row.extend(_fmt(values[c, i]) for c in comp_idx)
        lines.append(",".join(row))
    with open(path, "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")


def read_line_cut(path):
    """Parse a cut CSV: returns (header list, 2-D array columns-as-written)."""
    with open(path) as f:
        header = f.readline().strip().split(",")
        data = np.loadtxt(f, delimiter=",", ndmin=2)
    return header, data
