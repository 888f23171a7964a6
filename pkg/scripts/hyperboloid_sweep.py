"""Sweep two spheres apart and check the hyperboloid of virtual circles.

Writes the sweep as CSV (d, d1, r^2, circle center and radius) and reports
the worst residual of r^2 + d1^2 = r1^2 and how close sqrt(|r^2|)/d1 gets
to the asymptotic cone slope 1.

    python scripts/hyperboloid_sweep.py --r1 1 --r2 1.5 --d-max 200 --steps 400
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from cgameet.locus import SweepConfig, hyperbola_check, sweep
from cgameet.meet import Configuration


@dataclass
class HyperboloidConfig:
    r1: float = 1.0
    r2: float = 1.5
    d_min: float = 0.1
    d_max: float = 200.0
    steps: int = 400
    axis: tuple = (1.0, 1.0, 1.0)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--r1", type=float, default=1.0)
    parser.add_argument("--r2", type=float, default=1.5)
    parser.add_argument("--d-min", type=float, default=0.1)
    parser.add_argument("--d-max", type=float, default=200.0)
    parser.add_argument("--steps", type=int, default=400)
    cfg = HyperboloidConfig(**vars(parser.parse_args(argv)))

    config = SweepConfig(Configuration.SPHERE_SPHERE, cfg.r1, cfg.r2, axis=cfg.axis)
    samples = sweep(config, np.linspace(cfg.d_min, cfg.d_max, cfg.steps))
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["d", "d1", "r_squared", "classification", "branch",
                  "center_x", "center_y", "center_z", "radius", "imaginary"])
    for s in samples:
        c = s.circle
        out.writerow([f"{s.d:.12g}", f"{s.d1:.12g}", f"{s.r_squared:.12g}", s.classification.value,
                      s.branch.value, *(f"{v:.12g}" for v in c.center), f"{c.radius:.12g}", int(c.imaginary)])
    report = hyperbola_check(samples, tail=5)
    print(f"max |r^2 + d1^2 - r1^2| = {report.max_residual:.3e}; "
          f"cone slope deviation {report.slope_deviation:.3e} at d = {report.slope_d:.6g}", file=sys.stderr)


if __name__ == "__main__":
    main()
