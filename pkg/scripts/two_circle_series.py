"""Meet of two coplanar circles at the eight characteristic distances.

With r1 < r2 the distances cover: inside the inner tangency, the inner
tangency itself, between it and r2, r2, just beyond r2, near the outer
tangency, the outer tangency, and beyond it. Prints one CSV row per distance
with the meet, closed-form and oracle values side by side.

    python scripts/two_circle_series.py --r1 1 --r2 2
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from cgameet import closed_form
from cgameet.meet import circle_circle
from cgameet.oracle import circle_circle_analytic


@dataclass
class SeriesConfig:
    r1: float = 1.0
    r2: float = 2.0

    def distances(self):
        lo, hi = abs(self.r2 - self.r1), self.r1 + self.r2
        return [0.5 * lo, lo, 0.5 * (lo + self.r2), self.r2,
                0.5 * (self.r2 + hi), 0.95 * hi, hi, 1.5 * hi]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--r1", type=float, default=1.0)
    parser.add_argument("--r2", type=float, default=2.0)
    args = parser.parse_args(argv)
    cfg = SeriesConfig(args.r1, args.r2)
    if cfg.r1 == cfg.r2:
        parser.error("the inner tangency needs r1 != r2")

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["d", "classification", "r_squared", "closed_form", "oracle_h_squared", "d1", "c_x", "c_y"])
    for d in cfg.distances():
        m = circle_circle([0, 0, 0], cfg.r1, [d, 0, 0], cfg.r2)
        out.writerow([
            f"{d:.6g}", m.classification.value, f"{m.r_squared:.12g}",
            f"{closed_form.two_round_r_squared(cfg.r1, cfg.r2, d):.12g}",
            f"{circle_circle_analytic([0, 0, 0], cfg.r1, [d, 0, 0], cfg.r2).h_squared:.12g}",
            f"{m.d1:.12g}", f"{m.c[0] + 0.0:.12g}", f"{m.c[1] + 0.0:.12g}",
        ])


if __name__ == "__main__":
    main()
