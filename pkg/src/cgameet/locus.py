"""Loci of real and virtual intersections as the configuration distance varies.

A sweep holds the first object fixed at ``c1`` and moves the second one
along ``axis``: the second center for circle/sphere pairs, the foot point
of the line or plane otherwise. Each sample is reported in the frame with
origin ``c1``, first axis ``axis`` and second axis ``axis`` rotated by the
plane bivector, where it reads ``(d1, +-sqrt(|r**2|))``. Real samples lie on
``x**2 + y**2 = r1**2``, virtual ones on the hyperbola ``x**2 - y**2 = r1**2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import conformal as cf
from .algebra import Multivector
from .meet import (
    TANGENT_EPS,
    Classification,
    Configuration,
    MeetOutcome,
    circle_circle,
    circle_line,
    sphere_plane,
    sphere_sphere,
)


class Branch(str, enum.Enum):
    NEAR = "near"  # d1 >= 0: side of c1 facing the moving object
    FAR = "far"


@dataclass(frozen=True)
class CircleDescriptor:
    center: np.ndarray
    radius: float  # sqrt(|r**2|)
    imaginary: bool
    normal: np.ndarray


@dataclass(frozen=True)
class SweepConfig:
    configuration: Configuration
    r1: float
    r2: Optional[float] = None
    c1: Sequence[float] = (0.0, 0.0, 0.0)
    axis: Sequence[float] = (1.0, 0.0, 0.0)
    plane: Multivector = cf.E12

    def __post_init__(self):
        config = Configuration(self.configuration)
        object.__setattr__(self, "configuration", config)
        if not self.r1 > 0:
            raise ValueError("r1 must be positive")
        needs_r2 = config in (Configuration.CIRCLE_CIRCLE, Configuration.SPHERE_SPHERE)
        if needs_r2 and not (self.r2 is not None and self.r2 > 0):
            raise ValueError(f"{config.value} sweep needs a positive r2")
        axis = np.asarray(self.axis, dtype=float)
        object.__setattr__(self, "axis", axis / np.linalg.norm(axis))
        object.__setattr__(self, "c1", np.asarray(self.c1, dtype=float))

    @property
    def transverse(self) -> np.ndarray:
        return cf.euclid_part(cf.vec(self.axis) * self.plane)


@dataclass(frozen=True)
class LocusSample:
    d: float
    d1: float
    r_squared: float
    r1: float
    classification: Classification
    branch: Branch
    locus: tuple  # frame coordinates ((d1, +y), (d1, -y)), y = sqrt(|r**2|)
    points: tuple = ()  # real Euclidean intersection points (planar only)
    circle: Optional[CircleDescriptor] = None  # spatial only


def meet_at(config: SweepConfig, d: float, eps: float = TANGENT_EPS) -> MeetOutcome:
    c1, axis = config.c1, config.axis
    moved = c1 + d * axis
    kind = config.configuration
    if kind is Configuration.CIRCLE_CIRCLE:
        return circle_circle(c1, config.r1, moved, config.r2, config.plane, eps)
    if kind is Configuration.CIRCLE_LINE:
        line = cf.line_from(moved, config.transverse)
        return circle_line(c1, config.r1, line, config.plane, eps)
    if kind is Configuration.SPHERE_SPHERE:
        return sphere_sphere(c1, config.r1, moved, config.r2, eps)
    return sphere_plane(cf.sphere_from(c1, config.r1), cf.plane_from(moved, axis), eps)


def _sample(config: SweepConfig, out: MeetOutcome) -> LocusSample:
    y = out.radius
    common = dict(
        d=out.d,
        d1=out.d1,
        r_squared=out.r_squared,
        r1=config.r1,
        classification=out.classification,
        branch=Branch.NEAR if out.d1 >= 0 else Branch.FAR,
        locus=((out.d1, y), (out.d1, -y)),
    )
    if out.configuration.planar:
        return LocusSample(**common, points=out.points())
    circle = CircleDescriptor(out.c, y, out.r_squared < 0, out.normal)
    return LocusSample(**common, circle=circle)


def sweep(config: SweepConfig, d_values: Iterable[float], eps: float = TANGENT_EPS) -> list[LocusSample]:
    ds = [float(d) for d in d_values]
    bad = [d for d in ds if not d > 0]
    if bad:
        raise ValueError(f"sweep distances must be positive, got {bad[0]!r}")
    return [_sample(config, meet_at(config, d, eps)) for d in ds]


@dataclass(frozen=True)
class SignRegion:
    """Sign of ``r**2`` for two circles (or spheres) as a function of ``d``.

    Negative inside ``|r2 - r1|``, positive between the two tangencies,
    negative beyond ``r1 + r2``, zero on both boundaries.
    """

    r1: float
    r2: float
    d_inner: float
    d_outer: float

    def sign(self, d: float, rtol: float = 0.0) -> int:
        for boundary in (self.d_inner, self.d_outer):
            if abs(d - boundary) <= rtol * max(boundary, 1.0):
                return 0
        if d < self.d_inner or d > self.d_outer:
            return -1
        return 1

    __call__ = sign


def sign_region(r1: float, r2: float) -> SignRegion:
    if not (r1 > 0 and r2 > 0):
        raise ValueError("radii must be positive")
    return SignRegion(r1, r2, abs(r2 - r1), r1 + r2)


@dataclass(frozen=True)
class HyperbolaReport:
    count: int
    max_residual: Optional[float]
    slope_deviation: Optional[float]
    slope_d: Optional[float]


def hyperbola_check(samples: Sequence[LocusSample], tail: int = 1) -> HyperbolaReport:
    """Residual of ``r**2 + d1**2 = r1**2`` and asymptote slope deviation.

    The slope ``sqrt(|r**2|) / |d1|`` tends to 1 as ``d`` grows; it is taken
    over the ``tail`` virtual samples with the largest ``d``.
    """
    if not samples:
        return HyperbolaReport(0, None, None, None)
    residual = max(abs(s.r_squared + s.d1 * s.d1 - s.r1 * s.r1) for s in samples)
    virtual = sorted(
        (s for s in samples if s.classification is Classification.VIRTUAL and s.d1 != 0),
        key=lambda s: s.d,
    )[-tail:]
    if not virtual:
        return HyperbolaReport(len(samples), residual, None, None)
    dev = max(abs(np.sqrt(-s.r_squared) / abs(s.d1) - 1.0) for s in virtual)
    return HyperbolaReport(len(samples), residual, float(dev), virtual[-1].d)
