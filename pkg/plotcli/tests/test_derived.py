import numpy as np
import pytest

from mhdplot import UsageError, compute, read_snapshot
from mhdplot.derived import available_components


def _pressure_by_hand(snap):
    g = snap.meta["gamma"]
    rho = snap.fields["rho"]
    ke = (snap.fields["mx"] ** 2 + snap.fields["my"] ** 2 + snap.fields["mz"] ** 2) / (2 * rho)
    pb = (snap.fields["b1"] ** 2 + snap.fields["b2"] ** 2 + snap.fields["b3"] ** 2) / 2
    return (g - 1) * (snap.fields["E"] - ke - pb)


def test_pressure_and_mach(blast_artifacts):
    snap = read_snapshot(blast_artifacts["snapshot"])
    p = compute(snap, "pressure")
    want = _pressure_by_hand(snap)
    assert np.abs(p - want).max() <= 1e-12 * np.abs(want).max()
    assert p.min() > 0
    mach = compute(snap, "mach")
    cs = np.sqrt(snap.meta["gamma"] * want / snap.fields["rho"])
    u = np.sqrt(snap.fields["mx"] ** 2 + snap.fields["my"] ** 2 + snap.fields["mz"] ** 2) / snap.fields["rho"]
    assert np.abs(mach - u / cs).max() <= 1e-12 * max(1.0, (u / cs).max())


def test_magnetic_quantities(blast_artifacts):
    snap = read_snapshot(blast_artifacts["snapshot"])
    pb = compute(snap, "magnetic_pressure")
    bmag = compute(snap, "field_magnitude")
    assert np.allclose(pb, 0.5 * bmag**2, rtol=1e-14)


def test_sw_field_magnitude(artifact_dir):
    snap = read_snapshot(artifact_dir["sw-rotor"]["snapshot"])
    f = compute(snap, "field_magnitude")
    a = snap.fields["ha"] / snap.fields["h"]
    b = snap.fields["hb"] / snap.fields["h"]
    assert np.allclose(f, np.hypot(a, b), rtol=1e-14)


def test_raw_component_passthrough(artifact_dir):
    snap = read_snapshot(artifact_dir["sw-rotor"]["snapshot"])
    assert compute(snap, "h") is snap.fields["h"]


def test_ideal_only_components_rejected_on_sw(artifact_dir):
    snap = read_snapshot(artifact_dir["sw-orszag-tang"]["snapshot"])
    with pytest.raises(UsageError, match="available"):
        compute(snap, "mach")
    with pytest.raises(UsageError):
        compute(snap, "pressure")
    assert "mach" not in available_components(snap)


def test_unknown_component_lists_valid_ones(blast_artifacts):
    snap = read_snapshot(blast_artifacts["snapshot"])
    with pytest.raises(UsageError, match="pressure"):
        compute(snap, "vorticity")
