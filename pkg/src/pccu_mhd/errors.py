"""Exception hierarchy shared across the solver.

The CLI maps these onto exit codes: configuration/usage problems exit
with 2, numerical failures (positivity loss, NaN, stagnating time steps)
with 3, and I/O problems with 4.
"""


class PccuError(Exception):
    """Base class for all solver errors."""


class ConfigurationError(PccuError):
    """Invalid run configuration, CLI usage, or problem setup."""


class ShapeError(PccuError):
    """Array dimensions inconsistent with the grid they claim to live on."""


class NumericsError(PccuError):
    """Numerical failure while evaluating the scheme (NaN, blow-up)."""


class PositivityError(NumericsError):
    """Density, thickness, or pressure lost positivity.

    Carries the offending quantity and, when known, the interior cell
    index (j, k) where it happened.
    """

    def __init__(self, quantity, value, cell=None, where=""):
        self.quantity = quantity
        self.value = value
        self.cell = cell
        loc = f" at cell {cell}" if cell is not None else ""
        ctx = f" ({where})" if where else ""
        super().__init__(f"{quantity} = {value:g} is not positive{loc}{ctx}")


class StagnationError(NumericsError):
    """CFL time step fell below the configured minimum."""
