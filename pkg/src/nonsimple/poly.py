"""Dense univariate polynomial helpers over Z and Q.

Coefficients are listed from the highest degree down, so ``(1, 0, 1)`` is
x^2 + 1.  Results are tuples with leading zeros stripped; the zero
polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Poly = tuple


def trim(p) -> tuple:
    p = tuple(p)
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return tuple(p[i:])


def degree(p: Sequence) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def add(p: Sequence, q: Sequence) -> tuple:
    n = max(len(p), len(q))
    p = (0,) * (n - len(p)) + tuple(p)
    q = (0,) * (n - len(q)) + tuple(q)
    return trim(a + b for a, b in zip(p, q))


def mul(p: Sequence, q: Sequence) -> tuple:
    p, q = trim(p), trim(q)
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Sequence, c) -> tuple:
    return trim(c * a for a in p)


def derivative(p: Sequence) -> tuple:
    p = trim(p)
    n = len(p) - 1
    return trim(a * (n - i) for i, a in enumerate(p[:-1]))


def evaluate(p: Sequence, x):
    acc = 0
    for a in p:
        acc = acc * x + a
    return acc


def evaluate_mod(p: Sequence, x: int, modulus: int) -> int:
    acc = 0
    for a in p:
        acc = (acc * x + a) % modulus
    return acc


def content(p: Sequence) -> int:
    return reduce(gcd, (int(a) for a in p), 0)


def divmod_poly(p: Sequence, q: Sequence) -> tuple[tuple, tuple]:
    """Long division over Q; returns (quotient, remainder) with Fraction entries."""
    p = [Fraction(a) for a in trim(p)]
    q = [Fraction(a) for a in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return (), trim(p)
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    rem = list(p)
    for i in range(len(quot)):
        c = rem[i] / q[0]
        quot[i] = c
        if c:
            for j, b in enumerate(q):
                rem[i + j] -= c * b
    return trim(quot), trim(rem[len(quot):])


def gcd_poly(p: Sequence, q: Sequence) -> tuple:
    """Monic gcd over Q."""
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = Fraction(a[0])
    return tuple(Fraction(c) / lead for c in a)


def is_squarefree(p: Sequence) -> bool:
    """True iff p has no repeated factor over Q (gcd(p, p') is constant)."""
    p = trim(p)
    if len(p) <= 1:
        return bool(p)
    return degree(gcd_poly(p, derivative(p))) == 0


def _bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(p: Sequence, q: Sequence) -> list[list[int]]:
    p, q = trim(p), trim(q)
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q) + [0] * (size - n - 1 - i))
    return rows


def resultant(p: Sequence, q: Sequence):
    """Resultant of two polynomials; exact for integer or rational coefficients."""
    p, q = trim(p), trim(q)
    if not p or not q:
        return 0
    if len(p) == 1 and len(q) == 1:
        return 1
    fracs = [Fraction(c) for c in p + q]
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in fracs), 1)
    if den == 1:
        return _bareiss_det(sylvester_matrix(tuple(int(c) for c in p), tuple(int(c) for c in q)))
    # clear denominators, then undo the scaling: Res(a p, b q) = a^deg q * b^deg p * Res(p, q)
    pi = tuple(int(Fraction(c) * den) for c in p)
    qi = tuple(int(Fraction(c) * den) for c in q)
    r = _bareiss_det(sylvester_matrix(pi, qi))
    return Fraction(r, den ** ((len(p) - 1) + (len(q) - 1)))


def discriminant(p: Sequence):
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    p = trim(p)
    n = len(p) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(p, derivative(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d = Fraction(sign * r) / Fraction(p[0])
    return int(d) if d.denominator == 1 else d
