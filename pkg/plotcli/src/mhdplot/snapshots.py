"""Parser for the solver's snapshot and line-cut CSV files.

Deliberately self-contained: this package reads the text formats only and
re-derives everything it plots, so it doubles as an independent check of
the solver's serialized output.

Snapshot format: `#` header lines `key=value`, a column header
``j,k,x,y,<components...>``, then one row per cell, k outer, j inner, all
floats in 17-significant-digit scientific notation.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError

_FLOAT_KEYS = ("time", "xmin", "xmax", "ymin", "ymax", "cfl", "theta", "gamma", "g")
_INT_KEYS = ("nx", "ny")


class Snapshot:
    """Parsed snapshot: metadata plus per-component (ny, nx) arrays."""

    def __init__(self, meta: dict, fields: dict, x: np.ndarray, y: np.ndarray):
        self.meta = meta
        self.fields = fields
        self.x = x
        self.y = y

    @property
    def system(self) -> str:
        if "system" in self.meta:
            return self.meta["system"]
        return "ideal" if "gamma" in self.meta else "swmhd"

    @property
    def problem(self) -> str:
        return self.meta.get("problem", "?")

    @property
    def time(self) -> float:
        return self.meta.get("time", float("nan"))


def read_snapshot(path) -> Snapshot:
    meta: dict = {}
    with open(path) as f:
        line = f.readline()
        while line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            meta[key.strip()] = val.strip()
            line = f.readline()
        if not line:
            raise UsageError(f"{path}: snapshot has no data header")
        header = line.strip().split(",")
        data = np.loadtxt(f, delimiter=",", ndmin=2)
    for key in _FLOAT_KEYS:
        if key in meta:
            meta[key] = float(meta[key])
    for key in _INT_KEYS:
        if key not in meta:
            raise UsageError(f"{path}: snapshot header lacks {key}")
        meta[key] = int(meta[key])
    nx, ny = meta["nx"], meta["ny"]
    if data.shape[0] != nx * ny:
        raise UsageError(f"{path}: {data.shape[0]} rows for an {nx}x{ny} grid")
    fields = {}
    x = y = None
    for col, name in enumerate(header):
        grid_col = data[:, col].reshape(ny, nx)
        if name == "j" or name == "k":
            continue
        if name == "x":
            x = grid_col[0, :]
        elif name == "y":
            y = grid_col[:, 0]
        else:
            fields[name] = grid_col
    meta["components"] = [c for c in meta.get("components", "").split(",") if c]
    return Snapshot(meta, fields, x, y)


def read_cut(path):
    """Line-cut CSV: returns (abscissa label, column names, data columns)."""
    with open(path) as f:
        header = f.readline().strip().split(",")
        data = np.loadtxt(f, delimiter=",", ndmin=2)
    if not header or header[0] not in ("x", "y"):
        raise UsageError(f"{path}: cut file must start with an x or y column")
    return header[0], header[1:], data
