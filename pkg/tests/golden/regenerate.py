"""Rewrite the golden outputs from the current CLI. Review the diff before committing."""

import pathlib

from cgameet.cli import main

HERE = pathlib.Path(__file__).parent

# (output name, argv)
CASES = [
    *[(f"meet_{p.stem}.json", ["meet", p.name]) for p in sorted(HERE.glob("*.json"))],
    *[(f"check_circles_d{d}.json", ["check", f"circles_d{d}.json"]) for d in (1, 2, 3)],
    ("locus_circles.csv", ["locus", "circles_d1.json", "--d-min", "0.5", "--d-max", "3.5", "--steps", "7"]),
    ("locus_spheres.csv", ["locus", "spheres.json", "--d-min", "0.5", "--d-max", "4", "--steps", "8"]),
    ("locus_circle_line.csv", ["locus", "circle_line.json", "--d-min", "0.25", "--d-max", "2", "--steps", "8"]),
]


def cases():
    return [(name, [argv[0], str(HERE / argv[1]), *argv[2:]]) for name, argv in CASES]


if __name__ == "__main__":
    for name, argv in cases():
        assert main([*argv, "--output", str(HERE / "expected" / name)]) == 0
