#!/usr/bin/env python3
"""Tabulate the (n, n) mode ladder, effective volumes and couplings.

Writes one modes.csv per radius under --out/R<nm>/.
"""

import argparse
import sys

from magnoncavity.cli import parse_config, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radii-nm", default="30,50,70,100")
    ap.add_argument("--mu0-H0-T", type=float, default=0.5)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--out", default="out/modes")
    args = ap.parse_args()

    for tok in args.radii_nm.split(","):
        cfg = parse_config(None, overrides={
            "R_nm": tok.strip(),
            "mu0_H0_T": str(args.mu0_H0_T),
            "n_max": str(args.n_max),
        })
        cfg.experiment = "modes"
        cfg.out = f"{args.out}/R{tok.strip()}"
        status = run(cfg)
        if status != 0:
            return status
    return 0


if __name__ == "__main__":
    sys.exit(main())
