#!/usr/bin/env python3
"""Mediated vs vacuum spin-spin coupling across sphere radii at fixed gap."""

import argparse
import sys

from magnoncavity.cli import parse_config, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--G-nm", type=float, default=6.0, help="surface-emitter gap")
    ap.add_argument("--R-min-nm", type=float, default=20.0)
    ap.add_argument("--R-max-nm", type=float, default=100.0)
    ap.add_argument("--n-R", type=int, default=17)
    ap.add_argument("--out", default="out/coupling_sweep")
    args = ap.parse_args()

    cfg = parse_config(None, overrides={
        "G_nm": str(args.G_nm),
        "R_min_nm": str(args.R_min_nm),
        "R_max_nm": str(args.R_max_nm),
        "n_R": str(args.n_R),
    })
    cfg.experiment = "coupling-sweep"
    cfg.out = args.out
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
