#!/usr/bin/env python3
"""Regenerate the reference datasets: theory surfaces over the Bloch
sphere, the two meridian/azimuth curve series, their simulated-counting
counterparts, a fuzz verification report and a bound tournament summary.

Each CSV gets a companion .gp gnuplot script; the text reports land next
to them.  Everything is deterministic for a fixed --seed.
"""

import argparse
import contextlib
import io
import sys
from pathlib import Path

import numpy as np

from varbounds.cli import main as vb

PI = np.pi


def run(args):
    rc = vb([str(a) for a in args])
    if rc != 0:
        sys.exit(rc)


def capture(args, path: Path):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = vb([str(a) for a in args])
    path.write_text(buf.getvalue())
    if rc != 0:
        sys.exit(rc)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="results", help="output directory")
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--shots", type=int, default=2800,
                        help="counts per measurement setting for the simulated series")
    args = parser.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    # full-sphere theory surfaces, product and sum families
    run(["scan", "--theta-grid", 0, PI, 61, "--phi-grid", 0, 2 * PI, 61,
         "--mode", "both", "--out", out / "surfaces.csv"])

    # meridian series: theta = n*pi/12 at phi = 0
    series = ["--theta-grid", 0, PI, 13, "--phi-grid", 0, 0, 1]
    run(["scan", *series, "--out", out / "theta_series.csv"])
    run(["simulate", *series, "--shots", args.shots, "--seed", args.seed,
         "--out", out / "theta_series_sim.csv"])

    # azimuth series: phi = n*pi/12 at theta = pi/4 (the 2*pi endpoint wraps)
    series = ["--theta-grid", PI / 4, PI / 4, 1, "--phi-grid", 0, 2 * PI, 25]
    run(["scan", *series, "--out", out / "phi_series.csv"])
    run(["simulate", *series, "--shots", args.shots, "--seed", args.seed,
         "--out", out / "phi_series_sim.csv"])

    # randomized verification and the per-state bound ranking
    capture(["fuzz", "--trials", 10000, "--seed", args.seed], out / "fuzz_report.txt")
    capture(["tournament", "--theta-grid", 0, PI, 61, "--phi-grid", 0, 2 * PI, 61,
             "--mode", "both", "--seed", args.seed], out / "tournament.txt")

    print(f"wrote {len(list(out.iterdir()))} files to {out}/")


if __name__ == "__main__":
    main()
