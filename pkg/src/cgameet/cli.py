"""Command-line front end: ``meet``, ``locus`` and ``check`` on a scene file.

A scene is a JSON document with two objects and an optional tolerance::

    {
      "object_a": {"kind": "circle", "center": [0, 0, 0], "radius": 1, "plane": "e12"},
      "object_b": {"kind": "circle", "center": [3, 0, 0], "radius": 1, "plane": "e12"},
      "tolerance": 1e-9
    }

Lines take ``center`` (any point on the line) and ``direction``; planes take
``center`` and ``normal``; circles and lines take ``plane`` (``e12``,
``e13`` or ``e23``, default ``e12``) and must lie in it.

Exit codes: 0 success, 2 invalid input, 3 degenerate geometry.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np

from . import closed_form, oracle
from . import conformal as cf
from .errors import GeometryError
from .locus import SweepConfig, sweep
from .meet import TANGENT_EPS, Classification, Configuration, MeetOutcome, meet_objects

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3

KINDS = ("circle", "line", "sphere", "plane")
PAIRS = {
    ("circle", "circle"): Configuration.CIRCLE_CIRCLE,
    ("circle", "line"): Configuration.CIRCLE_LINE,
    ("sphere", "sphere"): Configuration.SPHERE_SPHERE,
    ("sphere", "plane"): Configuration.SPHERE_PLANE,
}
# coordinate index normal to each coordinate plane
_OFF_AXIS = {"e12": 2, "e13": 1, "e23": 0}
_FIRST_IN_PLANE = {"e12": 0, "e13": 0, "e23": 1}


class SceneError(ValueError):
    """Invalid scene; the message names the offending field."""


@dataclass(frozen=True)
class ObjectSpec:
    kind: str
    center: np.ndarray
    radius: Optional[float] = None
    direction: Optional[np.ndarray] = None
    normal: Optional[np.ndarray] = None
    plane: str = "e12"

    def build(self) -> cf.ConformalObject:
        if self.kind == "circle":
            return cf.circle_from(self.center, self.radius, cf.PLANES[self.plane])
        if self.kind == "sphere":
            return cf.sphere_from(self.center, self.radius)
        if self.kind == "line":
            return cf.line_from(self.center, self.direction)
        return cf.plane_from(self.center, self.normal)


@dataclass(frozen=True)
class SceneSpec:
    object_a: ObjectSpec
    object_b: ObjectSpec
    tolerance: float = TANGENT_EPS

    @property
    def configuration(self) -> Configuration:
        return PAIRS[(self.object_a.kind, self.object_b.kind)]


def _vector(raw: dict, key: str, where: str, nonzero: bool = False) -> np.ndarray:
    if key not in raw:
        raise SceneError(f"{where}.{key}: missing")
    value = raw[key]
    ok = (
        isinstance(value, list)
        and len(value) == 3
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    )
    if not ok or not all(math.isfinite(v) for v in value):
        raise SceneError(f"{where}.{key}: expected three finite numbers")
    arr = np.array(value, dtype=float)
    if nonzero and not np.any(arr):
        raise SceneError(f"{where}.{key}: must be nonzero")
    return arr


def _positive(raw: dict, key: str, where: str) -> float:
    if key not in raw:
        raise SceneError(f"{where}.{key}: missing")
    value = raw[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
        raise SceneError(f"{where}.{key}: expected a positive finite number")
    return float(value)


def _parse_object(raw: Any, where: str) -> ObjectSpec:
    if not isinstance(raw, dict):
        raise SceneError(f"{where}: expected an object")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise SceneError(f"{where}.kind: expected one of {', '.join(KINDS)}")
    center = _vector(raw, "center", where)
    spec: dict[str, Any] = {"kind": kind, "center": center}
    if kind in ("circle", "sphere"):
        spec["radius"] = _positive(raw, "radius", where)
    if kind == "line":
        spec["direction"] = _vector(raw, "direction", where, nonzero=True)
    if kind == "plane":
        spec["normal"] = _vector(raw, "normal", where, nonzero=True)
    if kind in ("circle", "line"):
        plane = raw.get("plane", "e12")
        if plane not in cf.PLANES:
            raise SceneError(f"{where}.plane: expected one of e12, e13, e23")
        spec["plane"] = plane
        axis = _OFF_AXIS[plane]
        for key in ("center", "direction"):
            if key in spec and spec[key][axis] != 0:
                raise SceneError(f"{where}.{key}: not in plane {plane} through the origin")
    return ObjectSpec(**spec)


def parse_scene(doc: Any) -> SceneSpec:
    if not isinstance(doc, dict):
        raise SceneError("scene: expected a JSON object")
    unknown = sorted(set(doc) - {"object_a", "object_b", "tolerance"})
    if unknown:
        raise SceneError(f"{unknown[0]}: unknown field")
    for key in ("object_a", "object_b"):
        if key not in doc:
            raise SceneError(f"{key}: missing")
    a = _parse_object(doc["object_a"], "object_a")
    b = _parse_object(doc["object_b"], "object_b")
    if (a.kind, b.kind) not in PAIRS and (b.kind, a.kind) in PAIRS:
        a, b = b, a
    if (a.kind, b.kind) not in PAIRS:
        raise SceneError(f"object_b.kind: unsupported pair {a.kind}/{b.kind}")
    if a.kind == "circle" and b.plane != a.plane:
        raise SceneError(f"object_b.plane: must match object_a ({a.plane})")
    tol = _positive(doc, "tolerance", "scene") if "tolerance" in doc else TANGENT_EPS
    return SceneSpec(a, b, tol)


def load_scene(path: str) -> SceneSpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SceneError(f"scene: cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SceneError(f"scene: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_scene(doc)


def _require_distinct_centers(scene: SceneSpec) -> None:
    a, b = scene.object_a, scene.object_b
    if a.kind == b.kind and np.array_equal(a.center, b.center):
        raise SceneError("object_b.center: concentric with object_a (center distance is zero)")


# output

def fmt(x: float) -> str:
    return format(float(x) + 0.0, ".17g")  # + 0.0 folds -0 into 0


def to_json(obj: Any, indent: int = 0) -> str:
    """JSON text with every real printed to 17 significant digits."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = [to_json(v, indent + 1) for v in obj]
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(items) + "]"
        return "[\n" + ",\n".join(pad + s for s in items) + "\n" + "  " * indent + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    return json.dumps(str(obj))


def _bivector(B) -> dict:
    return {"e12": B[0b011], "e13": B[0b101], "e23": B[0b110]}


def outcome_record(out: MeetOutcome) -> dict:
    rec: dict[str, Any] = {
        "configuration": out.configuration.value,
        "classification": out.classification.value,
        "r_squared": out.r_squared,
        "d": out.d,
        "d1": out.d1,
        "center": list(out.c),
    }
    if out.classification is Classification.DEGENERATE:
        return rec
    if out.configuration.planar:
        p_hat, foot = cf.decompose_line(out.carrier)
        rec["direction"] = list(out.direction)
        rec["carrier"] = {"kind": "line", "point": list(foot), "direction": list(p_hat)}
        rec["points"] = [list(p) for p in out.points()]
    else:
        info = cf.decompose_plane(out.carrier)
        rec["plane"] = _bivector(out.plane)
        rec["normal"] = list(out.normal)
        rec["carrier"] = {"kind": "plane", "point": list(info["point"]), "normal": list(info["normal"])}
        rec["radius"] = out.radius
        rec["imaginary_radius"] = out.r_squared < 0
    return rec


# commands

def cmd_meet(scene: SceneSpec) -> dict:
    _require_distinct_centers(scene)
    out = meet_objects(scene.object_a.build(), scene.object_b.build(), scene.tolerance)
    return {"command": "meet", **outcome_record(out)}


def _closed_form_and_oracle(scene: SceneSpec) -> tuple[float, float]:
    a, b = scene.object_a, scene.object_b
    config = scene.configuration
    if config in (Configuration.CIRCLE_CIRCLE, Configuration.SPHERE_SPHERE):
        d = float(np.linalg.norm(b.center - a.center))
        closed = closed_form.two_round_r_squared(a.radius, b.radius, d)
        if config is Configuration.CIRCLE_CIRCLE:
            normal = cf.plane_normal(cf.PLANES[a.plane])
            h2 = oracle.circle_circle_analytic(a.center, a.radius, b.center, b.radius, normal).h_squared
        else:
            h2 = oracle.sphere_sphere_analytic(a.center, a.radius, b.center, b.radius).h_squared
        return closed, h2
    if config is Configuration.CIRCLE_LINE:
        u = b.direction / np.linalg.norm(b.direction)
        offset = a.center - b.center
        d = float(np.linalg.norm(offset - (offset @ u) * u))
        h2 = oracle.circle_line_analytic(a.center, a.radius, b.center, b.direction).h_squared
    else:
        m = b.normal / np.linalg.norm(b.normal)
        d = abs(float((a.center - b.center) @ m))
        h2 = oracle.sphere_plane_analytic(a.center, a.radius, b.center, b.normal).h_squared
    return closed_form.round_flat_r_squared(a.radius, d), h2


def cmd_check(scene: SceneSpec) -> dict:
    _require_distinct_centers(scene)
    out = meet_objects(scene.object_a.build(), scene.object_b.build(), scene.tolerance)
    closed, h2 = _closed_form_and_oracle(scene)
    values = [out.r_squared, closed, h2]
    deviation = max(abs(x - y) for x in values for y in values)
    return {
        "command": "check",
        "configuration": out.configuration.value,
        "classification": out.classification.value,
        "r_squared": {"meet": out.r_squared, "closed_form": closed, "oracle": h2},
        "max_deviation": deviation,
        "tolerance": scene.tolerance,
        "ok": bool(deviation < scene.tolerance),
    }


def sweep_config(scene: SceneSpec) -> SweepConfig:
    a, b = scene.object_a, scene.object_b
    config = scene.configuration
    if config is Configuration.SPHERE_PLANE:
        return SweepConfig(config, a.radius, c1=a.center, axis=b.normal)
    if config is Configuration.SPHERE_SPHERE:
        axis = b.center - a.center
        if not np.any(axis):
            axis = np.array([1.0, 0.0, 0.0])
        return SweepConfig(config, a.radius, b.radius, c1=a.center, axis=axis)
    I_c = cf.PLANES[a.plane]
    if config is Configuration.CIRCLE_CIRCLE:
        axis = b.center - a.center
        r2 = b.radius
    else:
        # perpendicular to the line, inside the plane
        axis = cf.euclid_part(cf.vec(b.direction) * I_c)
        r2 = None
    if not np.any(axis):
        axis = np.eye(3)[_FIRST_IN_PLANE[a.plane]]
    return SweepConfig(config, a.radius, r2, c1=a.center, axis=axis, plane=I_c)


PLANAR_COLUMNS = ("d", "d1", "r_squared", "classification", "branch", "x", "y_plus", "y_minus")
SPATIAL_COLUMNS = (
    "d", "d1", "r_squared", "classification", "branch",
    "center_x", "center_y", "center_z", "radius", "imaginary",
    "normal_x", "normal_y", "normal_z",
)


def cmd_locus(scene: SceneSpec, d_min: float, d_max: float, steps: int) -> str:
    if not (math.isfinite(d_min) and math.isfinite(d_max)) or d_min <= 0 or d_max <= d_min:
        raise SceneError("--d-min/--d-max: need 0 < d-min < d-max")
    if steps < 2:
        raise SceneError("--steps: need at least 2")
    config = sweep_config(scene)
    samples = sweep(config, np.linspace(d_min, d_max, steps), scene.tolerance)
    planar = config.configuration.planar
    lines = [f"# configuration={config.configuration.value} r1={fmt(config.r1)}"
             + ("" if config.r2 is None else f" r2={fmt(config.r2)}"),
             "# " + ",".join(PLANAR_COLUMNS if planar else SPATIAL_COLUMNS)]
    for s in samples:
        row = [fmt(s.d), fmt(s.d1), fmt(s.r_squared), s.classification.value, s.branch.value]
        if planar:
            (x, yp), (_, ym) = s.locus
            row += [fmt(x), fmt(yp), fmt(ym)]
        else:
            c = s.circle
            row += [fmt(v) for v in c.center] + [fmt(c.radius), str(c.imaginary).lower()]
            row += [fmt(v) for v in c.normal]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cgameet", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("scene", help="scene JSON file")
        p.add_argument("--tolerance", type=float, default=None,
                       help="relative tangent tolerance (overrides the scene)")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    common(sub.add_parser("meet", help="meet the two objects of a scene"))
    common(sub.add_parser("check", help="compare meet, closed form and coordinate oracle"))
    p = sub.add_parser("locus", help="sweep the center distance and tabulate r^2")
    common(p)
    p.add_argument("--d-min", type=float, required=True)
    p.add_argument("--d-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    return parser


def run(args: argparse.Namespace) -> str:
    scene = load_scene(args.scene)
    if args.tolerance is not None:
        if not (math.isfinite(args.tolerance) and args.tolerance > 0):
            raise SceneError("--tolerance: expected a positive finite number")
        scene = SceneSpec(scene.object_a, scene.object_b, args.tolerance)
    if args.command == "meet":
        return to_json(cmd_meet(scene)) + "\n"
    if args.command == "check":
        return to_json(cmd_check(scene)) + "\n"
    return cmd_locus(scene, args.d_min, args.d_max, args.steps)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
    except SceneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GeometryError as exc:
        print(f"degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
