"""Path-conservative central-upwind finite-volume solver for 2-D ideal MHD
and shallow-water MHD with locally divergence-free magnetic reconstruction.

Hot kernels live in a compiled Cython extension when available; a
numpy implementation of the same sweep is selected as fallback at import
(see `pccu_mhd._backend`).
"""

from ._backend import available_backends, get_default_backend, set_default_backend
from .diagnostics import (
    DiagnosticsLog,
    divergence_residual,
    l1_difference,
    positivity_report,
    restrict_2x2,
    total_mass,
)
from .errors import (
    ConfigurationError,
    NumericsError,
    PccuError,
    PositivityError,
    ShapeError,
    StagnationError,
)
from .grid import BoundarySpec, Grid, GridSpec, StateField, build_grid, fill_ghost
from .ideal import GasParams, IdealMHD
from .limiter import df_scaling, gm_slope, interface_values, minmod
from .pccu import cu_flux, semidiscrete_rhs
from .problems import PROBLEM_NAMES, initial_state, make_model, make_problem, setup_run
from .swmhd import ShallowWaterMHD, SwParams
from .timestepping import TimeParams, compute_dt, integrate, ssp_rk3_step

__version__ = "0.1.0"

__all__ = [
    "BoundarySpec", "ConfigurationError", "DiagnosticsLog", "GasParams", "Grid",
    "GridSpec", "IdealMHD", "NumericsError", "PROBLEM_NAMES", "PccuError",
    "PositivityError", "ShallowWaterMHD", "ShapeError", "StagnationError",
    "StateField", "SwParams", "TimeParams", "available_backends", "build_grid",
    "compute_dt", "cu_flux", "df_scaling", "divergence_residual", "fill_ghost",
    "get_default_backend", "gm_slope", "initial_state", "integrate",
    "interface_values", "l1_difference", "make_model", "make_problem", "minmod",
    "positivity_report", "restrict_2x2", "semidiscrete_rhs", "set_default_backend",
    "setup_run", "ssp_rk3_step", "total_mass",
]
