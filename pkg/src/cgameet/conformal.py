"""Conformal model of Euclidean 3-space inside Cl(4,1).

Basis order is e1, e2, e3, e+ (squares +1), e- (squares -1). The null
vectors are ``n = e- + e+`` (infinity) and ``nbar = (e- - e+)/2`` (origin),
so ``n*n = nbar*nbar = 0`` and ``n . nbar = -1``.

Points are normalized by ``P . n = -1``. The embedding
``P = p + p**2/2 n + nbar`` gives ``P . nbar = -p**2/2``, not -1, so the
n-normalization is the only one consistent with the embedding formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .algebra import (
    REL_TOL,
    Multivector,
    Signature,
    blade_check,
    format_multivector,
    grade_select,
    left_contraction,
    outer,
    scalar_product,
)
from .errors import (
    CenterOffPlane,
    CollinearPoints,
    CoplanarPoints,
    DegeneratePair,
    FlatPencil,
    GeometryError,
    PointAtInfinity,
)

SIG = Signature(4, 1)
LABELS = ("1", "2", "3", "p", "m")

e1 = Multivector.blade(SIG, 0b00001)
e2 = Multivector.blade(SIG, 0b00010)
e3 = Multivector.blade(SIG, 0b00100)
ep = Multivector.blade(SIG, 0b01000)
em = Multivector.blade(SIG, 0b10000)

n = em + ep
nbar = 0.5 * (em - ep)
N = outer(n, nbar)
I = e1 * e2 * e3
IN = I * N
I_inv = -I

E12 = e1 * e2
E13 = e1 * e3
E23 = e2 * e3
PLANES = {"e12": E12, "e13": E13, "e23": E23}

_EUCLID_BITS = (0b001, 0b010, 0b100)
_EUCLID_BIVECTOR_BITS = (0b011, 0b101, 0b110)


def pretty(a: Multivector) -> str:
    return format_multivector(a, LABELS)


def vec(p: Sequence[float]) -> Multivector:
    """Euclidean vector ``p1 e1 + p2 e2 + p3 e3``."""
    x, y, z = (float(v) for v in p)
    c = np.zeros(SIG.dim)
    c[0b001], c[0b010], c[0b100] = x, y, z
    return Multivector(SIG, c)


def euclid_part(a: Multivector) -> np.ndarray:
    return np.array([a.coeffs[b] for b in _EUCLID_BITS])


def euclid_bivector(a: Multivector) -> Multivector:
    """Grade-2 part of ``a`` restricted to e12, e13, e23."""
    c = np.zeros(SIG.dim)
    for b in _EUCLID_BIVECTOR_BITS:
        c[b] = a.coeffs[b]
    return Multivector(SIG, c)


def up(p: Sequence[float]) -> Multivector:
    p = np.asarray(p, dtype=float)
    return vec(p) + 0.5 * float(p @ p) * n + nbar


def _as_array(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coordinates")
    return arr


def _wedge_norm(a: Multivector) -> float:
    return float(np.linalg.norm(a.coeffs))


def _unit_direction(v) -> np.ndarray:
    v = _as_array(v)
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise GeometryError("zero direction vector")
    return v / norm


class Kind(str, enum.Enum):
    POINT = "point"
    POINT_PAIR = "point_pair"
    LINE = "line"
    CIRCLE = "circle"
    PLANE = "plane"
    SPHERE = "sphere"


GRADE = {
    Kind.POINT: 1,
    Kind.POINT_PAIR: 2,
    Kind.LINE: 3,
    Kind.CIRCLE: 3,
    Kind.PLANE: 4,
    Kind.SPHERE: 4,
}
FLATS = {Kind.LINE, Kind.PLANE}


@dataclass(frozen=True)
class ConformalObject:
    """A validated blade of Cl(4,1) together with its Euclidean parameters.

    ``params`` holds whatever applies to the kind: ``center``, ``radius``,
    ``r_squared``, ``direction``, ``point``, ``plane`` (unit Euclidean
    bivector), ``normal``, ``distance``.
    """

    kind: Kind
    blade: Multivector
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        check = blade_check(self.blade)
        want = GRADE[self.kind]
        if not check.is_blade or check.grade != want:
            raise GeometryError(
                f"{self.kind.value} needs a grade-{want} blade, got grade {check.grade}"
                f" (blade={check.is_blade})"
            )
        scale = self.blade.max_abs()
        if self.kind in FLATS and (n ^ self.blade).max_abs() > REL_TOL * scale:
            raise GeometryError(f"{self.kind.value} blade does not contain infinity")
        if self.kind is Kind.POINT and abs(check.square) > REL_TOL * scale * scale:
            raise GeometryError("point blade is not null")

    def __getitem__(self, key: str):
        return self.params[key]


# points

def embed_point(p: Sequence[float]) -> ConformalObject:
    p = _as_array(p)
    return ConformalObject(Kind.POINT, up(p), {"center": p})


def _normalized_euclid(v: Multivector) -> np.ndarray:
    w = -scalar_product(v, n)
    if abs(w) <= REL_TOL * v.max_abs():
        raise PointAtInfinity("vector has no weight on the origin")
    return euclid_part(v) / w


def extract_point(P) -> np.ndarray:
    """Euclidean location of a (possibly scaled) null vector."""
    blade = P.blade if isinstance(P, ConformalObject) else P
    scale = blade.max_abs()
    if abs(scalar_product(blade, blade)) > REL_TOL * scale * scale:
        raise GeometryError("not a null vector")
    return _normalized_euclid(blade)


def _point(P) -> tuple[np.ndarray, Multivector]:
    if isinstance(P, ConformalObject):
        if P.kind is not Kind.POINT:
            raise GeometryError(f"expected a point, got {P.kind.value}")
        p = extract_point(P)
    else:
        p = _as_array(P)
    return p, up(p)


def round_center(X: Multivector) -> np.ndarray:
    """Center of a round blade, read from the sandwich ``X n X``."""
    return _normalized_euclid(grade_select(X * n * X, 1))


# point pairs

@dataclass(frozen=True)
class PointPairDecomposition:
    r_squared: float
    c: np.ndarray
    p_hat: np.ndarray

    def points(self) -> tuple[np.ndarray, ...]:
        """The two (or one, when tangent) real points; empty if virtual."""
        if self.r_squared < 0:
            return ()
        r = float(np.sqrt(self.r_squared))
        if r == 0.0:
            return (self.c.copy(),)
        return (self.c + r * self.p_hat, self.c - r * self.p_hat)


def point_pair(P1, P2) -> ConformalObject:
    p1, U1 = _point(P1)
    p2, U2 = _point(P2)
    dist = float(np.linalg.norm(p1 - p2))
    if dist <= REL_TOL * max(1.0, np.linalg.norm(p1), np.linalg.norm(p2)):
        raise DegeneratePair("coincident points")
    r = dist / 2
    params = {
        "radius": r,
        "r_squared": r * r,
        "center": (p1 + p2) / 2,
        "direction": (p1 - p2) / dist,
    }
    return ConformalObject(Kind.POINT_PAIR, U1 ^ U2, params)


def flat_direction(F: Multivector) -> Multivector:
    """``nbar _| (n _| F)``: gives ``p_hat`` for ``p_hat^C^n`` and ``I_c`` for ``C^I_c^n``."""
    return left_contraction(nbar, left_contraction(n, F))


def decompose_point_pair(V) -> PointPairDecomposition:
    """Signed squared half-separation, midpoint and unit direction.

    ``r_squared`` is negative for an imaginary (virtual) pair. The direction
    follows the orientation of the blade, so negating ``V`` flips ``p_hat``.
    """
    X = V.blade if isinstance(V, ConformalObject) else V
    carrier = X ^ n
    if carrier.max_abs() <= REL_TOL * X.max_abs():
        raise FlatPencil("point pair carrier vanishes")
    r2 = scalar_product(X, X) / scalar_product(carrier, carrier)
    d = euclid_part(flat_direction(carrier))
    return PointPairDecomposition(r2, round_center(X), d / np.linalg.norm(d))


# lines

def decompose_line(L: Multivector) -> tuple[np.ndarray, np.ndarray]:
    """Unit direction and the point of the line closest to the origin."""
    dvec = euclid_part(flat_direction(L))
    weight = float(np.linalg.norm(dvec))
    if weight == 0.0:
        raise GeometryError("not a line blade")
    p_hat = dvec / weight
    # L/weight = p_hat^c n - p_hat N, and nbar _| that has Euclidean part -p_hat^c
    moment = -euclid_bivector(left_contraction(nbar, L / weight))
    foot = euclid_part(left_contraction(vec(p_hat), moment))
    return p_hat, foot


def _line_object(blade: Multivector) -> ConformalObject:
    p_hat, foot = decompose_line(blade)
    return ConformalObject(Kind.LINE, blade, {"direction": p_hat, "point": foot})


def line_through(P1, P2) -> ConformalObject:
    p1, U1 = _point(P1)
    p2, U2 = _point(P2)
    if np.linalg.norm(p1 - p2) <= REL_TOL * max(1.0, np.linalg.norm(p1), np.linalg.norm(p2)):
        raise DegeneratePair("coincident points")
    return _line_object(U1 ^ U2 ^ n)


def line_from(point: Sequence[float], direction: Sequence[float]) -> ConformalObject:
    """Unit-weight line ``p_hat ^ C ^ n`` through ``point``."""
    p_hat = _unit_direction(direction)
    return _line_object(vec(p_hat) ^ up(_as_array(point)) ^ n)


# circles and planes

def _unit_bivector(B: Multivector) -> Multivector:
    sq = scalar_product(B, B)
    if sq >= 0:
        raise GeometryError("bivector does not square negative")
    return B / float(np.sqrt(-sq))


def check_plane_bivector(I_c: Multivector) -> Multivector:
    """Validate a unit Euclidean bivector (``I_c**2 = -1``)."""
    if not isinstance(I_c, Multivector) or I_c.sig != SIG:
        raise GeometryError("plane bivector must be a Cl(4,1) multivector")
    if (I_c - euclid_bivector(I_c)).max_abs() > REL_TOL * max(I_c.max_abs(), 1.0):
        raise GeometryError("plane bivector must be a Euclidean bivector")
    sq = I_c * I_c
    if abs(sq.scalar_part + 1.0) > 1e-9 or (sq - sq.scalar_part).max_abs() > 1e-9:
        raise GeometryError("plane bivector must square to -1")
    return I_c


def plane_normal(I_c: Multivector) -> np.ndarray:
    """Unit normal ``m`` with ``I_c = m I``."""
    return euclid_part(I_c * I_inv)


def decompose_circle(X: Multivector) -> dict[str, Any]:
    """Center, signed squared radius and oriented unit plane of a circle blade.

    The plane is oriented as in the three-point construction, i.e. for
    ``X = alpha (C + r**2/2 n) ^ (I_c + n (C _| I_c))`` with ``alpha > 0``.
    """
    carrier = X ^ n
    if carrier.max_abs() <= REL_TOL * X.max_abs():
        raise GeometryError("circle carrier vanishes (flat blade)")
    r2 = -scalar_product(X, X) / scalar_product(carrier, carrier)
    I_c = _unit_bivector(euclid_bivector(flat_direction(carrier)))
    return {
        "center": round_center(X),
        "r_squared": r2,
        "radius": float(np.sqrt(r2)) if r2 >= 0 else float("nan"),
        "plane": I_c,
        "normal": plane_normal(I_c),
    }


def _area_bivector(p1, p2, p3) -> Multivector:
    return vec(p1 - p2) ^ vec(p2 - p3)


def _scale(*ps) -> float:
    return max([1.0] + [float(np.linalg.norm(p)) for p in ps])


def circle_through(P1, P2, P3) -> ConformalObject:
    p1, U1 = _point(P1)
    p2, U2 = _point(P2)
    p3, U3 = _point(P3)
    area = _area_bivector(p1, p2, p3)
    span = max(np.linalg.norm(p1 - p2), np.linalg.norm(p2 - p3), np.linalg.norm(p3 - p1))
    if _wedge_norm(area) <= REL_TOL * max(span, 1e-300) ** 2:
        raise CollinearPoints("points are collinear")
    blade = U1 ^ U2 ^ U3
    params = decompose_circle(blade)
    params["alpha"] = float(np.sqrt(-scalar_product(area, area)))
    return ConformalObject(Kind.CIRCLE, blade, params)


def circle_from(c: Sequence[float], r: float, I_c: Multivector) -> ConformalObject:
    """Circle ``(C - r**2/2 n) I_c N`` in a plane through the origin.

    ``params['plane']`` stores ``I_c`` as given. This blade is the negative
    of the three-point construction, so ``decompose_circle`` reports ``-I_c``.
    """
    c = _as_array(c)
    check_plane_bivector(I_c)
    if not r > 0 or not np.isfinite(r):
        raise GeometryError(f"radius must be positive, got {r!r}")
    if (vec(c) ^ I_c).max_abs() > REL_TOL * _scale(c):
        raise CenterOffPlane("circle center is not in the plane through the origin")
    blade = (up(c) - 0.5 * r * r * n) * I_c * N
    params = {
        "center": c,
        "radius": float(r),
        "r_squared": float(r * r),
        "plane": I_c,
        "normal": plane_normal(I_c),
    }
    return ConformalObject(Kind.CIRCLE, blade, params)


def decompose_plane(X: Multivector) -> dict[str, Any]:
    """Unit plane bivector, normal, signed origin distance and weight."""
    B = euclid_bivector(flat_direction(X))
    alpha = float(np.sqrt(-scalar_product(B, B)))
    if alpha == 0.0:
        raise GeometryError("not a plane blade")
    I_c = B / alpha
    m = plane_normal(I_c)
    # dual vector m + delta n up to weight: X (I N)^-1 with (I N)^-1 = -I N
    dual = grade_select(X * (-IN), 1)
    m_w = euclid_part(dual)
    delta = -scalar_product(dual, nbar) / float(m_w @ m)
    return {"plane": I_c, "normal": m, "distance": delta, "point": delta * m, "alpha": alpha}


def plane_through(P1, P2, P3) -> ConformalObject:
    p1, U1 = _point(P1)
    p2, U2 = _point(P2)
    p3, U3 = _point(P3)
    area = _area_bivector(p1, p2, p3)
    span = max(np.linalg.norm(p1 - p2), np.linalg.norm(p2 - p3), np.linalg.norm(p3 - p1))
    if _wedge_norm(area) <= REL_TOL * max(span, 1e-300) ** 2:
        raise CollinearPoints("points are collinear")
    blade = U1 ^ U2 ^ U3 ^ n
    return ConformalObject(Kind.PLANE, blade, decompose_plane(blade))


def plane_from(point: Sequence[float], normal: Sequence[float]) -> ConformalObject:
    """Unit-weight plane ``C ^ I_c ^ n`` with ``I_c = m I``."""
    m = _unit_direction(normal)
    blade = up(_as_array(point)) ^ (vec(m) * I) ^ n
    return ConformalObject(Kind.PLANE, blade, decompose_plane(blade))


# spheres

def decompose_sphere(X: Multivector) -> dict[str, Any]:
    dual = grade_select(X * (-IN), 1)
    beta = -scalar_product(dual, n)
    if abs(beta) <= REL_TOL * X.max_abs():
        raise GeometryError("sphere blade is flat")
    r2 = scalar_product(dual, dual) / (beta * beta)
    return {
        "center": euclid_part(dual) / beta,
        "r_squared": r2,
        "radius": float(np.sqrt(r2)) if r2 >= 0 else float("nan"),
        "beta": beta,
    }


def sphere_through(P1, P2, P3, P4) -> ConformalObject:
    pts = [_point(P) for P in (P1, P2, P3, P4)]
    p = [x for x, _ in pts]
    vol = vec(p[0] - p[1]) ^ vec(p[1] - p[2]) ^ vec(p[2] - p[3])
    span = max(np.linalg.norm(a - b) for a in p for b in p)
    if _wedge_norm(vol) <= REL_TOL * max(span, 1e-300) ** 3:
        raise CoplanarPoints("points are coplanar")
    blade = pts[0][1] ^ pts[1][1] ^ pts[2][1] ^ pts[3][1]
    return ConformalObject(Kind.SPHERE, blade, decompose_sphere(blade))


def sphere_from(c: Sequence[float], r: float) -> ConformalObject:
    c = _as_array(c)
    if not r > 0 or not np.isfinite(r):
        raise GeometryError(f"radius must be positive, got {r!r}")
    blade = (up(c) - 0.5 * r * r * n) * IN
    return ConformalObject(
        Kind.SPHERE,
        blade,
        {"center": c, "radius": float(r), "r_squared": float(r * r), "beta": 1.0},
    )
