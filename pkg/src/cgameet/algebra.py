"""Dense Clifford algebra Cl(p, q).

Basis blades are indexed by bitsets: bit ``i`` set means ``e_{i+1}`` is a
factor, written in ascending index order. The first ``p`` basis vectors
square to +1, the remaining ``q`` to -1.

Every bilinear product is a grade-filtered geometric product. Since the
product of two basis blades is again a single basis blade, each product is
stored as two ``2**n x 2**n`` tables (target index, sign) and evaluated with
one ``np.bincount``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import GeometryError, NullBlade, SignatureMismatch

# relative tolerance for blade-hood and null tests, scaled by (max |coeff|)**2
REL_TOL = 1e-9

MAX_DIM = 8


@dataclass(frozen=True)
class Signature:
    p: int
    q: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature ({self.p}, {self.q})")
        if self.p + self.q > MAX_DIM:
            raise ValueError(f"dimension {self.p + self.q} exceeds cap {MAX_DIM}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def metric(self) -> tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q


def popcount(x: int) -> int:
    return bin(x).count("1")


def reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the factors of blade ``a`` followed by blade ``b``."""
    swaps = 0
    a >>= 1
    while a:
        swaps += popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def basis_product(a: int, b: int, metric: Sequence[int]) -> tuple[int, int]:
    """Geometric product of two basis blades as ``(sign, blade)``."""
    sign = reorder_sign(a, b)
    common = a & b
    i = 0
    while common:
        if common & 1:
            sign *= metric[i]
        common >>= 1
        i += 1
    return sign, a ^ b


# grade filters: (grade a, grade b, grade of product blade) -> keep?
_FILTERS: dict[str, Callable[[int, int, int], bool]] = {
    "geometric": lambda k, l, g: True,
    "outer": lambda k, l, g: g == k + l,
    "left": lambda k, l, g: g == l - k,
    "right": lambda k, l, g: g == k - l,
    "hestenes": lambda k, l, g: k != 0 and l != 0 and g == abs(k - l),
    "scalar": lambda k, l, g: g == 0,
}


@lru_cache(maxsize=None)
def _tables(sig: Signature, kind: str) -> tuple[np.ndarray, np.ndarray]:
    keep = _FILTERS[kind]
    dim = sig.dim
    target = np.zeros((dim, dim), dtype=np.intp)
    signs = np.zeros((dim, dim))
    grades = [popcount(i) for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            s, k = basis_product(i, j, sig.metric)
            target[i, j] = k
            if keep(grades[i], grades[j], grades[k]):
                signs[i, j] = s
    target.setflags(write=False)
    signs.setflags(write=False)
    return target.ravel(), signs.ravel()


@lru_cache(maxsize=None)
def _grades(sig: Signature) -> np.ndarray:
    g = np.array([popcount(i) for i in range(sig.dim)])
    g.setflags(write=False)
    return g


class Multivector:
    """Immutable element of Cl(p, q) stored as a dense coefficient array."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs):
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (sig.dim,):
            raise ValueError(f"expected {sig.dim} coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # construction helpers
    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls(sig, np.zeros(sig.dim))

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> Multivector:
        c = np.zeros(sig.dim)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def blade(cls, sig: Signature, bits: int, value: float = 1.0) -> Multivector:
        c = np.zeros(sig.dim)
        c[bits] = value
        return cls(sig, c)

    @classmethod
    def vector(cls, sig: Signature, components: Sequence[float]) -> Multivector:
        if len(components) != sig.n:
            raise ValueError(f"expected {sig.n} vector components")
        c = np.zeros(sig.dim)
        for i, x in enumerate(components):
            c[1 << i] = x
        return cls(sig, c)

    def basis(self, i: int) -> Multivector:
        """Basis vector ``e_{i+1}`` of this multivector's algebra."""
        return Multivector.blade(self.sig, 1 << i)

    # arithmetic
    def _coerce(self, other) -> Multivector:
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureMismatch(f"{self.sig} vs {other.sig}")
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector.scalar(self.sig, float(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return Multivector(self.sig, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs * float(other))
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.sig, self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return outer(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def __getitem__(self, bits: int) -> float:
        return float(self.coeffs[bits])

    # inspection
    def grade(self, k: int) -> Multivector:
        return grade_select(self, k)

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def grades_present(self, tol: float = 0.0) -> list[int]:
        g = _grades(self.sig)
        cut = tol * self.max_abs()
        return sorted({int(g[i]) for i in np.flatnonzero(np.abs(self.coeffs) > cut)})

    def allclose(self, other: Multivector, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        other = self._coerce(other)
        return bool(np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=rtol))

    def __repr__(self):
        return f"Multivector({self.sig.p},{self.sig.q}: {format_multivector(self)})"

    def __str__(self):
        return format_multivector(self)


def format_multivector(
    a: Multivector, labels: Sequence[str] | None = None, precision: int = 6
) -> str:
    """Human-readable sum of blades, e.g. ``3 e12 - 1.5 e1p``."""
    if labels is None:
        labels = [str(i + 1) for i in range(a.sig.n)]
    terms = []
    for bits in range(a.sig.dim):
        c = a.coeffs[bits]
        if c == 0:
            continue
        name = "".join(labels[i] for i in range(a.sig.n) if bits >> i & 1)
        mag = f"{abs(c):.{precision}g}"
        body = mag if not name else f"{mag} e{name}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def _check(a: Multivector, b: Multivector) -> None:
    if a.sig != b.sig:
        raise SignatureMismatch(f"{a.sig} vs {b.sig}")


def _product(a: Multivector, b: Multivector, kind: str) -> Multivector:
    _check(a, b)
    target, signs = _tables(a.sig, kind)
    w = signs * np.outer(a.coeffs, b.coeffs).ravel()
    return Multivector(a.sig, np.bincount(target, weights=w, minlength=a.sig.dim))


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _product(a, b, "geometric")


def outer(a: Multivector, b: Multivector) -> Multivector:
    return _product(a, b, "outer")


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Sum over grade pairs of ``<<a>_k <b>_l>_{l-k}``."""
    return _product(a, b, "left")


def right_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Sum over grade pairs of ``<<a>_k <b>_l>_{k-l}``."""
    return _product(a, b, "right")


def hestenes_inner(a: Multivector, b: Multivector) -> Multivector:
    """Grade ``|k-l|`` part of each graded product; zero if either grade is 0."""
    return _product(a, b, "hestenes")


def scalar_product(a: Multivector, b: Multivector) -> float:
    return _product(a, b, "scalar").scalar_part


def grade_select(a: Multivector, k: int) -> Multivector:
    mask = _grades(a.sig) == k
    return Multivector(a.sig, np.where(mask, a.coeffs, 0.0))


def reverse(a: Multivector) -> Multivector:
    g = _grades(a.sig)
    signs = np.where((g * (g - 1) // 2) % 2 == 0, 1.0, -1.0)
    return Multivector(a.sig, a.coeffs * signs)


@dataclass(frozen=True)
class BladeCheck:
    is_blade: bool
    grade: int
    square: float


def blade_check(a: Multivector, tol: float = REL_TOL) -> BladeCheck:
    """Test whether ``a`` is homogeneous and squares to a pure scalar.

    The reported grade is the one carrying the largest coefficient norm.
    """
    scale = a.max_abs()
    if scale == 0.0:
        return BladeCheck(False, 0, 0.0)
    g = _grades(a.sig)
    norms = [float(np.linalg.norm(a.coeffs[g == k])) for k in range(a.sig.n + 1)]
    dominant = int(np.argmax(norms))
    cut = tol * scale
    homogeneous = all(norms[k] <= cut for k in range(a.sig.n + 1) if k != dominant)
    sq = geometric_product(a, a)
    rest = np.abs(sq.coeffs[1:])
    pure = bool(rest.size == 0 or rest.max() <= tol * scale * scale)
    return BladeCheck(homogeneous and pure, dominant, sq.scalar_part)


def blade_inverse(a: Multivector, tol: float = REL_TOL) -> Multivector:
    """Inverse of a blade, ``a / (a a)``."""
    check = blade_check(a, tol)
    if not check.is_blade:
        raise GeometryError("blade_inverse requires a blade")
    if abs(check.square) <= tol * a.max_abs() ** 2:
        raise NullBlade(f"blade squares to {check.square!r}")
    return a / check.square
