"""Standalone renderer for MHD solver snapshot and line-cut CSVs."""

from .derived import available_components, compute
from .errors import UsageError
from .plots import contour_plot, line_plot
from .snapshots import Snapshot, read_cut, read_snapshot

__version__ = "0.1.0"

__all__ = [
    "Snapshot", "UsageError", "available_components", "compute",
    "contour_plot", "line_plot", "read_cut", "read_snapshot",
]
