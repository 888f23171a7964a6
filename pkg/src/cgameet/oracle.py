"""Coordinate-geometry intersections via radical lines and planes.

Used as ground truth for the meet. Nothing in this module touches the
Clifford algebra code. Every result carries the signed ``h_squared``, the
squared half-chord (or squared circle radius), negative when the objects
miss each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np


class AnalyticKind(str, enum.Enum):
    TWO_POINTS = "two_points"
    ONE_POINT = "one_point"
    NO_INTERSECTION = "no_intersection"
    CIRCLE = "circle_of_intersection"
    TANGENT_POINT = "tangent_point"


@dataclass(frozen=True)
class AnalyticResult:
    kind: AnalyticKind
    h_squared: float
    center: np.ndarray
    points: tuple = field(default=())
    radius: Optional[float] = None
    normal: Optional[np.ndarray] = None


def _arr(v) -> np.ndarray:
    return np.asarray(v, dtype=float).reshape(3)


def _unit(v) -> np.ndarray:
    v = _arr(v)
    return v / np.linalg.norm(v)


def _planar(center, h2, along, r1, eps) -> AnalyticResult:
    if abs(h2) <= eps * r1 * r1:
        return AnalyticResult(AnalyticKind.ONE_POINT, h2, center, (center.copy(),))
    if h2 < 0:
        return AnalyticResult(AnalyticKind.NO_INTERSECTION, h2, center)
    h = np.sqrt(h2)
    return AnalyticResult(AnalyticKind.TWO_POINTS, h2, center, (center + h * along, center - h * along))


def _spatial(center, h2, normal, r1, eps) -> AnalyticResult:
    if abs(h2) <= eps * r1 * r1:
        return AnalyticResult(AnalyticKind.TANGENT_POINT, h2, center, (center.copy(),), 0.0, normal)
    if h2 < 0:
        return AnalyticResult(AnalyticKind.NO_INTERSECTION, h2, center, normal=normal)
    return AnalyticResult(AnalyticKind.CIRCLE, h2, center, radius=float(np.sqrt(h2)), normal=normal)


def _radical(c1, r1, c2, r2):
    c1, c2 = _arr(c1), _arr(c2)
    d = float(np.linalg.norm(c2 - c1))
    if d == 0.0:
        raise ValueError("concentric: center distance is zero")
    u = (c2 - c1) / d
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    return c1 + a * u, r1 * r1 - a * a, u


def circle_circle_analytic(c1, r1, c2, r2, normal=(0.0, 0.0, 1.0), eps=1e-9) -> AnalyticResult:
    """Two circles in the plane with the given normal."""
    foot, h2, u = _radical(c1, r1, c2, r2)
    return _planar(foot, h2, np.cross(_unit(normal), u), r1, eps)


def circle_line_analytic(c1, r1, point, direction, eps=1e-9) -> AnalyticResult:
    c1 = _arr(c1)
    u = _unit(direction)
    p = _arr(point)
    foot = p + float((c1 - p) @ u) * u
    dist2 = float((c1 - foot) @ (c1 - foot))
    return _planar(foot, r1 * r1 - dist2, u, r1, eps)


def sphere_sphere_analytic(c1, r1, c2, r2, eps=1e-9) -> AnalyticResult:
    center, h2, u = _radical(c1, r1, c2, r2)
    return _spatial(center, h2, u, r1, eps)


def sphere_plane_analytic(c1, r1, point, normal, eps=1e-9) -> AnalyticResult:
    c1 = _arr(c1)
    m = _unit(normal)
    dist = float((c1 - _arr(point)) @ m)
    return _spatial(c1 - dist * m, r1 * r1 - dist * dist, m, r1, eps)
