"""Closed-form meet blades and squared radii.

These are written directly in terms of centers, radii and directions and
never call the contraction meet, so they serve as an independent check on
:mod:`cgameet.meet`. The point-pair forms use the bracket
``{p^c + ((c^2 + r^2) p - 2 (c.p) c)/2 n + p nbar + (c.p) N}``, which
stays real when ``r**2 < 0``.
"""

from __future__ import annotations

import numpy as np

from .algebra import Multivector, left_contraction
from .conformal import E12, I, N, n, nbar, up, vec


def pair_bracket(c, r_squared: float, p_hat) -> Multivector:
    """``P1 ^ P2 / (2 r)`` for the pair ``c +- r p_hat``."""
    c = np.asarray(c, dtype=float)
    p_hat = np.asarray(p_hat, dtype=float)
    cp = float(c @ p_hat)
    return (
        (vec(p_hat) ^ vec(c))
        + 0.5 * ((float(c @ c) + r_squared) * vec(p_hat) - 2 * cp * vec(c)) * n
        + vec(p_hat) * nbar
        + cp * N
    )


def two_round_r_squared(r1: float, r2: float, d: float) -> float:
    """``d^2 (r1^2 r2^2 / d^4 - (1 - r1^2/d^2 - r2^2/d^2)^2 / 4)``."""
    return d * d * (r1 * r1 * r2 * r2 / d**4 - 0.25 * (1 - r1 * r1 / (d * d) - r2 * r2 / (d * d)) ** 2)


def round_flat_r_squared(r1: float, d: float) -> float:
    return r1 * r1 - d * d


def midpoint(c1, r1: float, c2, r2: float) -> np.ndarray:
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    d2 = float((c2 - c1) @ (c2 - c1))
    return c1 + 0.5 * (1 + (r1 * r1 - r2 * r2) / d2) * (c2 - c1)


def d1(r1: float, r2: float, d: float) -> float:
    return 0.5 * (d + (r1 * r1 - r2 * r2) / d)


def _power_terms(c1, r1, c2, r2):
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    return c1, c2, float(c1 @ c1) - r1 * r1, float(c2 @ c2) - r2 * r2


def circle_circle_expansion(c1, r1: float, c2, r2: float, I_c: Multivector = E12) -> Multivector:
    """Four-term expansion in ``I_c``, ``I_c n``, ``I_c nbar``, ``I_c N``."""
    c1, c2, s1, s2 = _power_terms(c1, r1, c2, r2)
    return (
        0.5 * (s1 - s2) * I_c
        + 0.5 * (s2 * vec(c1) - s1 * vec(c2)) * I_c * n
        + vec(c2 - c1) * I_c * nbar
        + (vec(c1) ^ vec(c2)) * I_c * N
    )


def circle_circle_meet(c1, r1: float, c2, r2: float, I_c: Multivector = E12) -> Multivector:
    """``(d / 2r) P1 ^ P2`` with ``p_hat = (c2 - c1) I_c / d``."""
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    d = float(np.linalg.norm(c2 - c1))
    p_hat = vec((c2 - c1) / d) * I_c
    p_hat = np.array([p_hat[0b001], p_hat[0b010], p_hat[0b100]])
    return d * pair_bracket(midpoint(c1, r1, c2, r2), two_round_r_squared(r1, r2, d), p_hat)


def circle_line_meet(c1, r1: float, c2, p_hat) -> Multivector:
    """``-P1 ^ P2 / (2r)`` centered on the foot point ``c2`` of the line."""
    d = float(np.linalg.norm(np.asarray(c2, dtype=float) - np.asarray(c1, dtype=float)))
    return -pair_bracket(c2, round_flat_r_squared(r1, d), p_hat)


def sphere_sphere_expansion(c1, r1: float, c2, r2: float) -> Multivector:
    c1, c2, s1, s2 = _power_terms(c1, r1, c2, r2)
    return (
        0.5 * (s1 - s2) * I
        - 0.5 * (s2 * vec(c1) - s1 * vec(c2)) * I * n
        + vec(c1 - c2) * I * nbar
        + (vec(c1) ^ vec(c2)) * I * N
    )


def sphere_sphere_meet(c1, r1: float, c2, r2: float) -> Multivector:
    """``d (C + r^2/2 n) ^ (I_c + n (C _| I_c))`` with ``I_c = (c1 - c2) I / d``."""
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    d = float(np.linalg.norm(c2 - c1))
    I_c = vec((c1 - c2) / d) * I
    C = up(midpoint(c1, r1, c2, r2))
    r_sq = two_round_r_squared(r1, r2, d)
    return d * ((C + 0.5 * r_sq * n) ^ (I_c + n * left_contraction(C, I_c)))


def sphere_plane_meet(c1, r1: float, point, normal) -> Multivector:
    """``(C + r^2/2 n) ^ (I_c + n (C _| I_c))`` for the unit plane ``C2 ^ (m I) ^ n``."""
    c1 = np.asarray(c1, dtype=float)
    m = np.asarray(normal, dtype=float)
    m = m / np.linalg.norm(m)
    dist = float((c1 - np.asarray(point, dtype=float)) @ m)
    foot = c1 - dist * m
    I_c = vec(m) * I
    C = up(foot)
    return (C + 0.5 * round_flat_r_squared(r1, dist) * n) ^ (I_c + n * left_contraction(C, I_c))
