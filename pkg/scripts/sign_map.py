"""Sign of r^2 over a (r2, d) grid for fixed r1, as CSV.

Each cell holds -1, 0 or +1 from the meet classification, next to the
piecewise prediction of sign_region. The last column flags disagreement;
a clean run has none.

    python scripts/sign_map.py --r1 1 --r2-max 3 --d-max 5 --n 61 > sign.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from cgameet.locus import sign_region
from cgameet.meet import Classification, circle_circle

SIGN = {Classification.REAL: 1, Classification.TANGENT: 0, Classification.VIRTUAL: -1}


@dataclass
class GridConfig:
    r1: float = 1.0
    r2_max: float = 3.0
    d_max: float = 5.0
    n: int = 41


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--r1", type=float, default=1.0)
    parser.add_argument("--r2-max", type=float, default=3.0)
    parser.add_argument("--d-max", type=float, default=5.0)
    parser.add_argument("--n", type=int, default=41)
    cfg = GridConfig(**vars(parser.parse_args(argv)))

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["r2", "d", "meet_sign", "predicted_sign", "mismatch"])
    mismatches = 0
    for r2 in np.linspace(cfg.r2_max / cfg.n, cfg.r2_max, cfg.n):
        region = sign_region(cfg.r1, r2)
        for d in np.linspace(cfg.d_max / cfg.n, cfg.d_max, cfg.n):
            got = SIGN[circle_circle([0, 0, 0], cfg.r1, [d, 0, 0], r2).classification]
            want = region.sign(d, rtol=1e-9)
            mismatches += got != want
            out.writerow([f"{r2:.6g}", f"{d:.6g}", got, want, int(got != want)])
    print(f"{mismatches} mismatches", file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
