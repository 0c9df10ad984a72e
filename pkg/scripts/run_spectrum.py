#!/usr/bin/env python3
"""Sample the magnon spectral density seen by an equatorial spin emitter."""

import argparse
import sys

from magnoncavity.cli import parse_config, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R-nm", type=float, default=30.0)
    ap.add_argument("--mu0-H0-T", type=float, default=0.5)
    ap.add_argument("--Gamma", type=float, default=1e7, help="mode linewidth, rad/s")
    ap.add_argument("--out", default="out/spectrum")
    args = ap.parse_args()

    cfg = parse_config(None, overrides={
        "R_nm": str(args.R_nm),
        "mu0_H0_T": str(args.mu0_H0_T),
        "Gamma_rad_per_s": str(args.Gamma),
    })
    cfg.experiment = "spectrum"
    cfg.out = args.out
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
