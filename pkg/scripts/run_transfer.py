#!/usr/bin/env python3
"""Dispersive magnon-mediated state transfer between two antipodal spins."""

import argparse
import sys

from magnoncavity.cli import parse_config, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R-nm", type=float, default=30.0)
    ap.add_argument("--Delta-over-g", type=float, default=10.0)
    ap.add_argument("--Gamma", type=float, default=1e6, help="mode linewidth, rad/s")
    ap.add_argument("--t-end-us", type=float, default=3.0)
    ap.add_argument("--out", default="out/transfer")
    args = ap.parse_args()

    cfg = parse_config(None, overrides={
        "R_nm": str(args.R_nm),
        "Delta_over_g": str(args.Delta_over_g),
        "Gamma_rad_per_s": str(args.Gamma),
        "t_end_us": str(args.t_end_us),
        "n_samples": "5000",
    })
    cfg.experiment = "transfer"
    cfg.out = args.out
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
