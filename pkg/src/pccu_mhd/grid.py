"""Uniform Cartesian mesh, cell-averaged fields, and ghost-cell filling.

Layout convention used everywhere in the package: a field component is a
2-D array indexed ``[k, j]`` (row = y, column = x), stored C-contiguous,
with ``ng`` ghost layers on every side.  Interior cells occupy
``[ng:ng+ny, ng:ng+nx]``.  Two ghost layers are enough for the scheme:
face values at the domain edge need slopes in the first ghost ring, and
those slopes need one more ring of data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, ShapeError

PERIODIC = "periodic"
EXTRAPOLATION = "extrapolation"

GHOST = 2


@dataclass(frozen=True)
class GridSpec:
    """Cell counts and domain bounds for a uniform Cartesian mesh."""

    nx: int
    ny: int
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    ghost: int = GHOST

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ConfigurationError(f"cell counts must be >= 1, got nx={self.nx}, ny={self.ny}")
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ConfigurationError(
                f"domain bounds inverted: [{self.xmin},{self.xmax}]x[{self.ymin},{self.ymax}]"
            )
        if self.ghost != GHOST:
            raise ConfigurationError(f"ghost width is fixed at {GHOST}")


@dataclass(frozen=True)
class BoundarySpec:
    """Per-side boundary condition: periodic or zero-order extrapolation.

    Periodic on one side requires periodic on the opposite side.
    """

    left: str = EXTRAPOLATION
    right: str = EXTRAPOLATION
    bottom: str = EXTRAPOLATION
    top: str = EXTRAPOLATION

    def __post_init__(self):
        for side in (self.left, self.right, self.bottom, self.top):
            if side not in (PERIODIC, EXTRAPOLATION):
                raise ConfigurationError(f"unknown boundary condition {side!r}")
        if (self.left == PERIODIC) != (self.right == PERIODIC):
            raise ConfigurationError("periodic in x requires both left and right periodic")
        if (self.bottom == PERIODIC) != (self.top == PERIODIC):
            raise ConfigurationError("periodic in y requires both bottom and top periodic")

    @classmethod
    def periodic(cls) -> "BoundarySpec":
        return cls(PERIODIC, PERIODIC, PERIODIC, PERIODIC)

    @classmethod
    def extrapolation(cls) -> "BoundarySpec":
        return cls()


class Grid:
    """Immutable uniform Cartesian mesh with ghost layers.

    Built via :func:`build_grid`.  Cell centers: x_j = xmin + (j + 1/2) dx
    for interior j in [0, nx); the padded center arrays ``x``/``y`` cover
    ghosts too.
    """

    def __init__(self, spec: GridSpec):
        self.spec = spec
        self.nx = spec.nx
        self.ny = spec.ny
        self.ng = spec.ghost
        self.xmin, self.xmax = spec.xmin, spec.xmax
        self.ymin, self.ymax = spec.ymin, spec.ymax
        self.dx = (spec.xmax - spec.xmin) / spec.nx
        self.dy = (spec.ymax - spec.ymin) / spec.ny
        self.nxt = self.nx + 2 * self.ng
        self.nyt = self.ny + 2 * self.ng
        # padded center coordinates (ghosts included)
        self.x = spec.xmin + (np.arange(self.nxt) - self.ng + 0.5) * self.dx
        self.y = spec.ymin + (np.arange(self.nyt) - self.ng + 0.5) * self.dy
        self.x.setflags(write=False)
        self.y.setflags(write=False)

    @property
    def interior(self):
        """(slice_k, slice_j) selecting interior cells of a [k, j] array."""
        ng = self.ng
        return (slice(ng, ng + self.ny), slice(ng, ng + self.nx))

    @property
    def x_interior(self):
        return self.x[self.ng : self.ng + self.nx]

    @property
    def y_interior(self):
        return self.y[self.ng : self.ng + self.ny]

    def cell_area(self) -> float:
        return self.dx * self.dy

    def __repr__(self):
        return (
            f"Grid({self.nx}x{self.ny}, [{self.xmin},{self.xmax}]x[{self.ymin},{self.ymax}], "
            f"dx={self.dx:g}, dy={self.dy:g})"
        )


def build_grid(spec: GridSpec) -> Grid:
    """Construct the mesh for a validated spec."""
    return Grid(spec)


class StateField:
    """Cell-averaged conserved vector field on a grid, ghosts included.

    ``q`` has shape (ncomp, nyt, nxt).  Component order is fixed per
    system; see the model classes.  Interior positivity of the leading
    component (density or thickness) is checked, never clamped.
    """

    def __init__(self, grid: Grid, ncomp: int, q: np.ndarray | None = None):
        self.grid = grid
        self.ncomp = ncomp
        shape = (ncomp, grid.nyt, grid.nxt)
        if q is None:
            self.q = np.zeros(shape)
        else:
            if q.shape != shape:
                raise ShapeError(f"state shape {q.shape} does not match grid {shape}")
            self.q = np.ascontiguousarray(q, dtype=np.float64)

    @property
    def interior(self) -> np.ndarray:
        sk, sj = self.grid.interior
        return self.q[:, sk, sj]

    def copy(self) -> "StateField":
        return StateField(self.grid, self.ncomp, self.q.copy())


def fill_ghost(field: StateField, bc: BoundarySpec, grid: Grid) -> StateField:
    """Populate both ghost layers on every side, in place.

    Periodic wraps interior cells; extrapolation copies the nearest
    interior cell.  x-sides first, then y-sides, so corners end up
    consistent with both.  Idempotent.
    """
    if field.grid is not grid and (field.grid.nxt, field.grid.nyt) != (grid.nxt, grid.nyt):
        raise ShapeError("field does not live on the given grid")
    q = field.q
    ng, nx, ny = grid.ng, grid.nx, grid.ny
    if bc.left == PERIODIC:
        q[:, :, :ng] = q[:, :, nx : nx + ng]
        q[:, :, ng + nx :] = q[:, :, ng : 2 * ng]
    else:
        q[:, :, :ng] = q[:, :, ng : ng + 1]
        q[:, :, ng + nx :] = q[:, :, ng + nx - 1 : ng + nx]
    if bc.bottom == PERIODIC:
        q[:, :ng, :] = q[:, ny : ny + ng, :]
        q[:, ng + ny :, :] = q[:, ng : 2 * ng, :]
    else:
        q[:, :ng, :] = q[:, ng : ng + 1, :]
        q[:, ng + ny :, :] = q[:, ng + ny - 1 : ng + ny, :]
    return field
