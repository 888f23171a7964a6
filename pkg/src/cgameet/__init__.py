"""Conformal geometric algebra meets of circles, lines, spheres and planes,
including virtual intersections with negative squared radius."""

from .algebra import (
    BladeCheck,
    Multivector,
    Signature,
    blade_check,
    blade_inverse,
    geometric_product,
    grade_select,
    hestenes_inner,
    left_contraction,
    outer,
    reverse,
    right_contraction,
    scalar_product,
)
from .conformal import (
    ConformalObject,
    Kind,
    circle_from,
    circle_through,
    decompose_point_pair,
    embed_point,
    extract_point,
    line_from,
    line_through,
    plane_from,
    plane_through,
    point_pair,
    sphere_from,
    sphere_through,
)
from .locus import SweepConfig, hyperbola_check, sign_region, sweep
from .meet import (
    Classification,
    Configuration,
    MeetOutcome,
    circle_circle,
    circle_line,
    classify,
    join_for,
    meet,
    meet_objects,
    sphere_plane,
    sphere_sphere,
    tangent_limit,
)

__version__ = "0.1.0"
