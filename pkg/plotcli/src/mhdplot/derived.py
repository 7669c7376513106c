"""Derived fields recomputed from raw conserved snapshot components.

The EOS here is intentionally a second, independent implementation: values
derived by the plotting layer cross-check the solver's own diagnostics.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError
from .snapshots import Snapshot

IDEAL_DERIVED = ("pressure", "mach", "magnetic_pressure", "field_magnitude", "speed")
SW_DERIVED = ("field_magnitude", "speed")


def available_components(snap: Snapshot):
    derived = IDEAL_DERIVED if snap.system == "ideal" else SW_DERIVED
    return tuple(snap.fields) + derived


def _ideal_velocity(snap):
    rho = snap.fields["rho"]
    return snap.fields["mx"] / rho, snap.fields["my"] / rho, snap.fields["mz"] / rho


def _ideal_pressure(snap):
    gamma = snap.meta["gamma"]
    rho = snap.fields["rho"]
    u, v, w = _ideal_velocity(snap)
    b1, b2, b3 = snap.fields["b1"], snap.fields["b2"], snap.fields["b3"]
    return (gamma - 1.0) * (
        snap.fields["E"]
        - 0.5 * rho * (u * u + v * v + w * w)
        - 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    )


def compute(snap: Snapshot, component: str) -> np.ndarray:
    """Raw or derived field by name; raises UsageError with the valid list."""
    if component in snap.fields:
        return snap.fields[component]
    ideal = snap.system == "ideal"
    if component == "pressure" and ideal:
        return _ideal_pressure(snap)
    if component == "mach" and ideal:
        u, v, w = _ideal_velocity(snap)
        p = _ideal_pressure(snap)
        cs = np.sqrt(snap.meta["gamma"] * p / snap.fields["rho"])
        return np.sqrt(u * u + v * v + w * w) / cs
    if component == "magnetic_pressure" and ideal:
        b1, b2, b3 = snap.fields["b1"], snap.fields["b2"], snap.fields["b3"]
        return 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    if component == "field_magnitude":
        if ideal:
            b1, b2, b3 = snap.fields["b1"], snap.fields["b2"], snap.fields["b3"]
            return np.sqrt(b1 * b1 + b2 * b2 + b3 * b3)
        h = snap.fields["h"]
        a, b = snap.fields["ha"] / h, snap.fields["hb"] / h
        return np.sqrt(a * a + b * b)
    if component == "speed":
        if ideal:
            u, v, w = _ideal_velocity(snap)
            return np.sqrt(u * u + v * v + w * w)
        h = snap.fields["h"]
        u, v = snap.fields["hu"] / h, snap.fields["hv"] / h
        return np.sqrt(u * u + v * v)
    raise UsageError(
        f"unknown component {component!r} for a {snap.system} snapshot; "
        f"available: {', '.join(available_components(snap))}"
    )
