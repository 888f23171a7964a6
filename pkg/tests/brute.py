"""Brute-force Clifford products, independent of the bitset tables.

Basis blades are handled as explicit lists of vector indices; products are
formed by concatenation, bubble sorting (one sign flip per swap) and
cancelling equal neighbours with their metric square.
"""

import numpy as np

from cgameet.algebra import Multivector


def _indices(bits, n):
    return [i for i in range(n) if bits >> i & 1]


def basis_product(a, b, metric):
    factors = _indices(a, len(metric)) + _indices(b, len(metric))
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            if factors[i] > factors[i + 1]:
                factors[i], factors[i + 1] = factors[i + 1], factors[i]
                sign = -sign
                changed = True
    out = []
    for f in factors:
        if out and out[-1] == f:
            out.pop()
            sign *= metric[f]
        else:
            out.append(f)
    return sign, sum(1 << f for f in out)


def gp(A, B):
    metric = A.sig.metric
    out = np.zeros(A.sig.dim)
    for i, a in enumerate(A.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(B.coeffs):
            if b == 0:
                continue
            s, k = basis_product(i, j, metric)
            out[k] += s * a * b
    return Multivector(A.sig, out)


def grade(A, k):
    c = np.array([x if bin(i).count("1") == k else 0.0 for i, x in enumerate(A.coeffs)])
    return Multivector(A.sig, c)


def graded_sum(A, B, target):
    """Sum over k, l of <<A>_k <B>_l>_{target(k, l)}; target None drops the term."""
    n = A.sig.n
    out = Multivector.zero(A.sig)
    for k in range(n + 1):
        for l in range(n + 1):
            g = target(k, l)
            if g is None:
                continue
            out = out + grade(gp(grade(A, k), grade(B, l)), g)
    return out


def outer(A, B):
    return graded_sum(A, B, lambda k, l: k + l)


def left(A, B):
    return graded_sum(A, B, lambda k, l: l - k)


def right(A, B):
    return graded_sum(A, B, lambda k, l: k - l)


def hestenes(A, B):
    return graded_sum(A, B, lambda k, l: None if k == 0 or l == 0 else abs(k - l))


def rev(A):
    c = [x * (-1) ** (bin(i).count("1") * (bin(i).count("1") - 1) // 2) for i, x in enumerate(A.coeffs)]
    return Multivector(A.sig, c)
