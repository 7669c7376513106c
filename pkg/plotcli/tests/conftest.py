"""Generates solver artifacts through the solver's CLI (its external
interface); nothing here imports the solver package itself."""

from __future__ import annotations

import subprocess
import sys

import pytest

PROBLEMS = {
    "brio-wu": dict(nx=64, ny=8, cut="y=0"),
    "orszag-tang": dict(nx=24, ny=24, cut="y=3.14"),
    "rotor": dict(nx=24, ny=24, cut="y=0.5"),
    "blast": dict(nx=24, ny=24, cut="y=0"),
    "sw-orszag-tang": dict(nx=24, ny=24, cut="y=3.14"),
    "sw-rotor": dict(nx=24, ny=24, cut="y=0"),
    "sw-explosion": dict(nx=24, ny=24, cut="y=0"),
}


def run_solver(args):
    cmd = [sys.executable, "-m", "pccu_mhd.cli"] + args
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"solver CLI failed ({proc.returncode}): {proc.stderr}")
    return proc


@pytest.fixture(scope="session")
def artifact_dir(tmp_path_factory):
    """One tiny run per benchmark problem: snapshot, diagnostics log, cut."""
    root = tmp_path_factory.mktemp("solver-artifacts")
    t_final = {"brio-wu": 0.2, "orszag-tang": 0.5, "rotor": 0.295, "blast": 0.01,
               "sw-orszag-tang": 0.5, "sw-rotor": 0.2, "sw-explosion": 0.25}
    out = {}
    for name, opts in PROBLEMS.items():
        outdir = root / name
        run_solver([
            "run", "--problem", name, "--nx", str(opts["nx"]), "--ny", str(opts["ny"]),
            "--t-final", str(t_final[name]), "--outdir", str(outdir),
            "--cut", opts["cut"],
        ])
        nx, ny = opts["nx"], opts["ny"]
        snaps = sorted(outdir.glob(f"{name}_nx{nx}_ny{ny}_t*.csv"))
        out[name] = dict(
            snapshot=snaps[-1],
            diag=outdir / f"{name}_nx{nx}_ny{ny}_diag.log",
            cut=outdir / f"{name}_nx{nx}_ny{ny}_cut.csv",
        )
    return out


@pytest.fixture(scope="session")
def blast_artifacts(tmp_path_factory):
    """A finer blast run for the derived-field cross-check."""
    outdir = tmp_path_factory.mktemp("blast-48")
    run_solver([
        "run", "--problem", "blast", "--nx", "48", "--ny", "48",
        "--outdir", str(outdir), "--cut", "y=0",
    ])
    return dict(
        snapshot=outdir / "blast_nx48_ny48_t0.01.csv",
        diag=outdir / "blast_nx48_ny48_diag.log",
        cut=outdir / "blast_nx48_ny48_cut.csv",
    )
