"""Full meet of coplanar circles/lines and of spheres/planes.

The meet is always evaluated as ``M = (V1 _| J^-1) _| V2`` with left
contractions. Squared radius, center and orientation are then read off the
meet blade itself; nothing here uses the closed forms in
:mod:`cgameet.closed_form`, which exist only to cross-check this path.

For planar configurations ``r**2 = M**2 / (M^n)**2``; for spatial ones the
sign flips, ``r**2 = -M**2 / (M^n)**2``, because ``M`` is then a circle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import conformal as cf
from .algebra import REL_TOL, Multivector, blade_inverse, left_contraction, scalar_product
from .conformal import E12, IN, ConformalObject, Kind, N, n
from .errors import (
    CenterOffPlane,
    ConcentricCircles,
    ConcentricSpheres,
    GeometryError,
    NotCoplanar,
    NotTangent,
    Unsupported,
)

# relative tolerance on r**2 / r1**2 for the tangent verdict
TANGENT_EPS = 1e-9


class Classification(str, enum.Enum):
    REAL = "real"
    TANGENT = "tangent"
    VIRTUAL = "virtual"
    DEGENERATE = "degenerate"


class Configuration(str, enum.Enum):
    CIRCLE_CIRCLE = "circle-circle"
    CIRCLE_LINE = "circle-line"
    SPHERE_SPHERE = "sphere-sphere"
    SPHERE_PLANE = "sphere-plane"

    @property
    def planar(self) -> bool:
        return self in (Configuration.CIRCLE_CIRCLE, Configuration.CIRCLE_LINE)


@dataclass(frozen=True)
class JoinBlade:
    J: Multivector
    J_inverse: Multivector


@dataclass(frozen=True)
class MeetOutcome:
    """Result of a full meet.

    ``d`` is the center distance (circle-circle, sphere-sphere) or the
    distance from the first center to the line/plane. ``d1`` is the signed
    distance from the first center to ``c`` along the center line, so that
    ``r_squared + d1**2 == r1**2`` for every non-degenerate outcome.
    ``direction`` is the unit point-pair direction (planar cases); ``plane``
    and ``normal`` give the oriented plane of the intersection circle
    (spatial cases).
    """

    configuration: Configuration
    M: Multivector
    carrier: Multivector
    classification: Classification
    r_squared: float
    c: np.ndarray
    d: float
    d1: float
    r1: float
    direction: Optional[np.ndarray] = None
    plane: Optional[Multivector] = None
    normal: Optional[np.ndarray] = None

    @property
    def radius(self) -> float:
        """``sqrt(|r**2|)``; imaginary for virtual outcomes."""
        return float(np.sqrt(abs(self.r_squared)))

    def points(self) -> tuple[np.ndarray, ...]:
        """Real intersection points of a planar meet (empty when virtual)."""
        if not self.configuration.planar:
            raise GeometryError("spatial meets intersect in circles, not points")
        if self.classification is Classification.TANGENT:
            return (self.c.copy(),)
        if self.classification is not Classification.REAL:
            return ()
        r = self.radius
        return (self.c + r * self.direction, self.c - r * self.direction)


def classify(r_squared: float, scale: float, eps: float = TANGENT_EPS) -> Classification:
    if abs(r_squared) <= eps * scale:
        return Classification.TANGENT
    return Classification.REAL if r_squared > 0 else Classification.VIRTUAL


def _blade(V) -> Multivector:
    return V.blade if isinstance(V, ConformalObject) else V


def meet(V1, V2, J) -> Multivector:
    """``(V1 _| J^-1) _| V2``."""
    J_inv = J.J_inverse if isinstance(J, JoinBlade) else blade_inverse(J)
    return left_contraction(left_contraction(_blade(V1), J_inv), _blade(V2))


def _make_join(J: Multivector) -> JoinBlade:
    return JoinBlade(J, blade_inverse(J))


def _same_plane(A: Multivector, B: Multivector) -> bool:
    return (A - B).max_abs() <= 1e-9 or (A + B).max_abs() <= 1e-9


def _in_plane(v: np.ndarray, I_c: Multivector) -> bool:
    return (cf.vec(v) ^ I_c).max_abs() <= REL_TOL * max(1.0, float(np.linalg.norm(v)))


def _circle_plane(V: ConformalObject) -> Multivector:
    I_c = V.params["plane"]
    if not _in_plane(V.params["center"], I_c):
        raise CenterOffPlane("circle plane does not contain the origin")
    return I_c


def join_for(V1: ConformalObject, V2: ConformalObject) -> JoinBlade:
    """``I_c N`` for a coplanar circle/circle or circle/line pair, ``I N`` for
    sphere/sphere or sphere/plane."""
    kinds = (V1.kind, V2.kind)
    if kinds == (Kind.CIRCLE, Kind.CIRCLE):
        I_c = _circle_plane(V1)
        if not _same_plane(I_c, V2.params["plane"]) or not _in_plane(V2.params["center"], I_c):
            raise NotCoplanar("circles do not share a plane through the origin")
        return _make_join(I_c * N)
    if kinds == (Kind.CIRCLE, Kind.LINE):
        I_c = _circle_plane(V1)
        if not (_in_plane(V2.params["direction"], I_c) and _in_plane(V2.params["point"], I_c)):
            raise NotCoplanar("line is not in the circle plane")
        return _make_join(I_c * N)
    if kinds in ((Kind.SPHERE, Kind.SPHERE), (Kind.SPHERE, Kind.PLANE)):
        return _make_join(IN)
    raise Unsupported(f"no meet for {V1.kind.value} and {V2.kind.value}")


def _is_zero(M: Multivector, *operands: Multivector) -> bool:
    scale = max(op.max_abs() for op in operands)
    return M.max_abs() <= REL_TOL * scale * scale


def _check_distance(d: float, c1, c2, exc: type) -> None:
    if d <= REL_TOL * max(1.0, float(np.linalg.norm(c1)), float(np.linalg.norm(c2))):
        raise exc("centers coincide")


def _planar_outcome(config, M, c1, r1, d, eps) -> MeetOutcome:
    carrier = M ^ n
    r2 = scalar_product(M, M) / scalar_product(carrier, carrier)
    c = cf.round_center(M)
    dvec = cf.euclid_part(cf.flat_direction(carrier))
    return MeetOutcome(
        configuration=config,
        M=M,
        carrier=carrier,
        classification=classify(r2, r1 * r1, eps),
        r_squared=r2,
        c=c,
        d=d,
        d1=0.0,
        r1=r1,
        direction=dvec / np.linalg.norm(dvec),
    )


def _spatial_outcome(config, M, c1, r1, d, eps) -> MeetOutcome:
    carrier = M ^ n
    r2 = -scalar_product(M, M) / scalar_product(carrier, carrier)
    B = cf.euclid_bivector(cf.flat_direction(carrier))
    I_c = B / float(np.sqrt(-scalar_product(B, B)))
    return MeetOutcome(
        configuration=config,
        M=M,
        carrier=carrier,
        classification=classify(r2, r1 * r1, eps),
        r_squared=r2,
        c=cf.round_center(M),
        d=d,
        d1=0.0,
        r1=r1,
        plane=I_c,
        normal=cf.plane_normal(I_c),
    )


def _with_d1(out: MeetOutcome, d1: float) -> MeetOutcome:
    return replace(out, d1=float(d1))


def circle_circle(c1, r1: float, c2, r2: float, I_c: Multivector = E12,
                  eps: float = TANGENT_EPS) -> MeetOutcome:
    """Meet of two circles in the plane ``I_c`` through the origin."""
    V1 = cf.circle_from(c1, r1, I_c)
    V2 = cf.circle_from(c2, r2, I_c)
    c1, c2 = V1.params["center"], V2.params["center"]
    d = float(np.linalg.norm(c2 - c1))
    _check_distance(d, c1, c2, ConcentricCircles)
    M = meet(V1, V2, _make_join(I_c * N))
    out = _planar_outcome(Configuration.CIRCLE_CIRCLE, M, c1, r1, d, eps)
    return _with_d1(out, float((out.c - c1) @ (c2 - c1)) / d)


def circle_line(c1, r1: float, line: ConformalObject, I_c: Multivector = E12,
                eps: float = TANGENT_EPS) -> MeetOutcome:
    """Meet of a circle and a coplanar line.

    The line is rescaled to unit weight, ``p_hat ^ C2 ^ n``, keeping its
    orientation; then ``M ^ n == -line``.
    """
    V1 = cf.circle_from(c1, r1, I_c)
    L = _unit_line(line)
    join = join_for(V1, L)
    c1 = V1.params["center"]
    p_hat = L.params["direction"]
    foot = L.params["point"] + float((c1 - L.params["point"]) @ p_hat) * p_hat
    d = float(np.linalg.norm(foot - c1))
    M = meet(V1, L, join)
    out = _planar_outcome(Configuration.CIRCLE_LINE, M, c1, r1, d, eps)
    return _with_d1(out, float(np.linalg.norm(out.c - c1)))


def sphere_sphere(c1, r1: float, c2, r2: float, eps: float = TANGENT_EPS) -> MeetOutcome:
    V1 = cf.sphere_from(c1, r1)
    V2 = cf.sphere_from(c2, r2)
    c1, c2 = V1.params["center"], V2.params["center"]
    d = float(np.linalg.norm(c2 - c1))
    _check_distance(d, c1, c2, ConcentricSpheres)
    M = meet(V1, V2, _make_join(IN))
    out = _spatial_outcome(Configuration.SPHERE_SPHERE, M, c1, r1, d, eps)
    return _with_d1(out, float((out.c - c1) @ (c2 - c1)) / d)


def sphere_plane(sphere: ConformalObject, plane: ConformalObject,
                 eps: float = TANGENT_EPS) -> MeetOutcome:
    """Meet of a sphere and a plane; the plane is rescaled to unit weight so
    that ``M ^ n == plane``."""
    S = cf.sphere_from(sphere.params["center"], sphere.params["radius"])
    P = _unit_plane(plane)
    c1, r1 = S.params["center"], S.params["radius"]
    d = abs(float((c1 - P.params["point"]) @ P.params["normal"]))
    M = meet(S, P, _make_join(IN))
    out = _spatial_outcome(Configuration.SPHERE_PLANE, M, c1, r1, d, eps)
    return _with_d1(out, float(np.linalg.norm(out.c - c1)))


def _unit_line(line: ConformalObject) -> ConformalObject:
    if line.kind is not Kind.LINE:
        raise GeometryError(f"expected a line, got {line.kind.value}")
    w = float(np.sqrt(abs(scalar_product(line.blade, line.blade))))
    return ConformalObject(Kind.LINE, line.blade / w, dict(line.params))


def _unit_plane(plane: ConformalObject) -> ConformalObject:
    if plane.kind is not Kind.PLANE:
        raise GeometryError(f"expected a plane, got {plane.kind.value}")
    w = float(np.sqrt(abs(scalar_product(plane.blade, plane.blade))))
    return ConformalObject(Kind.PLANE, plane.blade / w, {**plane.params, "alpha": 1.0})


def canonical_pair(V1: ConformalObject, V2: ConformalObject):
    """Put a supported pair in (round, other) order with canonical weights.

    Circles and spheres are rebuilt from their parameters, lines and planes
    are rescaled to unit weight. Returns ``(configuration, A, B)``.
    """
    if V1.kind in (Kind.LINE, Kind.PLANE) and V2.kind in (Kind.CIRCLE, Kind.SPHERE):
        V1, V2 = V2, V1
    kinds = (V1.kind, V2.kind)
    if kinds == (Kind.CIRCLE, Kind.CIRCLE):
        I_c = _circle_plane(V1)
        A = cf.circle_from(V1["center"], V1["radius"], I_c)
        B = cf.circle_from(V2["center"], V2["radius"], I_c)
        join_for(A, V2)
        return Configuration.CIRCLE_CIRCLE, A, B
    if kinds == (Kind.CIRCLE, Kind.LINE):
        I_c = _circle_plane(V1)
        return Configuration.CIRCLE_LINE, cf.circle_from(V1["center"], V1["radius"], I_c), _unit_line(V2)
    if kinds == (Kind.SPHERE, Kind.SPHERE):
        return (Configuration.SPHERE_SPHERE, cf.sphere_from(V1["center"], V1["radius"]),
                cf.sphere_from(V2["center"], V2["radius"]))
    if kinds == (Kind.SPHERE, Kind.PLANE):
        return Configuration.SPHERE_PLANE, cf.sphere_from(V1["center"], V1["radius"]), _unit_plane(V2)
    raise Unsupported(f"no meet for {V1.kind.value} and {V2.kind.value}")


def meet_objects(V1: ConformalObject, V2: ConformalObject,
                 eps: float = TANGENT_EPS) -> MeetOutcome:
    """Meet any supported pair of objects.

    Identical rounds give ``M = 0`` and a ``DEGENERATE`` outcome; distinct
    concentric rounds raise :class:`Concentric`.
    """
    config, A, B = canonical_pair(V1, V2)
    J = join_for(A, B)
    M = meet(A, B, J)
    if _is_zero(M, A.blade, B.blade):
        nan = float("nan")
        return MeetOutcome(config, M, M ^ n, Classification.DEGENERATE, nan,
                           np.full(3, nan), nan, nan, A["radius"])
    if config is Configuration.CIRCLE_CIRCLE:
        return circle_circle(A["center"], A["radius"], B["center"], B["radius"], A["plane"], eps)
    if config is Configuration.CIRCLE_LINE:
        return circle_line(A["center"], A["radius"], B, A["plane"], eps)
    if config is Configuration.SPHERE_SPHERE:
        return sphere_sphere(A["center"], A["radius"], B["center"], B["radius"], eps)
    return sphere_plane(A, B, eps)


def tangent_limit(outcome: MeetOutcome, V1: ConformalObject, V2: ConformalObject,
                  rtol: float = 1e-8) -> Multivector:
    """Limit blade of a tangent meet, checked against the contraction meet.

    circles: ``d (p_hat + (C . p_hat) n) ^ C``; circle and line:
    ``-(p_hat + (C2 . p_hat) n) ^ C2`` with ``p_hat`` the line direction;
    spheres: ``d C ^ (I_c + n (C _| I_c))`` with ``I_c = (c1 - c2) I / d``;
    sphere and unit plane ``C2 ^ I_c ^ n``: ``C ^ (I_c + n (C _| I_c))``.
    """
    if outcome.classification is not Classification.TANGENT:
        raise NotTangent(f"outcome is {outcome.classification.value}")
    config, A, B = canonical_pair(V1, V2)
    if config is not outcome.configuration:
        raise GeometryError("objects do not match the outcome configuration")
    C = cf.up(outcome.c)
    if config is Configuration.CIRCLE_CIRCLE:
        c1, c2, d = A["center"], B["center"], outcome.d
        p_hat = cf.euclid_part(cf.vec((c2 - c1) / d) * A["plane"])
        limit = d * ((cf.vec(p_hat) + scalar_product(C, cf.vec(p_hat)) * n) ^ C)
    elif config is Configuration.CIRCLE_LINE:
        p_hat = B["direction"]
        limit = -((cf.vec(p_hat) + scalar_product(C, cf.vec(p_hat)) * n) ^ C)
    elif config is Configuration.SPHERE_SPHERE:
        c1, c2, d = A["center"], B["center"], outcome.d
        I_c = cf.vec((c1 - c2) / d) * cf.I
        limit = d * (C ^ (I_c + n * left_contraction(C, I_c)))
    else:
        I_c = B["plane"]
        limit = C ^ (I_c + n * left_contraction(C, I_c))
    M = meet(A, B, join_for(A, B))
    if (limit - M).max_abs() > rtol * max(M.max_abs(), limit.max_abs()):
        raise GeometryError("tangent limit does not match the computed meet")
    return limit
