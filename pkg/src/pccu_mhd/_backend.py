"""Backend selection: compiled kernels when importable, numpy otherwise.

The compiled extension (`pccu_mhd._kernels`, built from ``_kernels.pyx``)
implements the same RHS sweep as `_rhs_numpy` in tight C loops.  Selection
happens at import; `set_default_backend` or the per-call ``backend``
argument override it.
"""

from __future__ import annotations

from .errors import ConfigurationError

try:
    from . import _kernels
except ImportError:  # pragma: no cover - depends on build environment
    _kernels = None

_default = "cython" if _kernels is not None else "python"


def available_backends():
    return ("cython", "python") if _kernels is not None else ("python",)


def get_default_backend() -> str:
    return _default


def set_default_backend(name: str) -> None:
    global _default
    resolve_backend(name)
    _default = resolve_backend(name)


def resolve_backend(name: str | None) -> str:
    if name in (None, "auto"):
        return _default
    if name not in ("cython", "python"):
        raise ConfigurationError(f"unknown backend {name!r}; choose cython, python, or auto")
    if name == "cython" and _kernels is None:
        raise ConfigurationError("compiled kernels are not available in this installation")
    return name


def rhs_and_bound(q, model, grid, theta, backend=None):
    """Dispatch one RHS evaluation; returns (padded rhs array, CFL bound)."""
    name = resolve_backend(backend)
    if name == "cython":
        if model.kind == "ideal":
            return _kernels.rhs_ideal(q, model.gamma, grid.ng, grid.nx, grid.ny,
                                      grid.dx, grid.dy, theta)
        return _kernels.rhs_swmhd(q, model.g, grid.ng, grid.nx, grid.ny,
                                  grid.dx, grid.dy, theta)
    from . import _rhs_numpy

    return _rhs_numpy.rhs_and_bound(q, model, grid, theta)
