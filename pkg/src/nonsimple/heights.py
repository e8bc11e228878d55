"""Exact heights of rationals and projective points over Q.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored in lowest terms with a positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InvalidInputError

Rat = Fraction


def as_rat(value) -> Fraction:
    if isinstance(value, str):
        return parse_rat(value)
    return Fraction(value)


def parse_rat(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational number: {text!r}") from exc


def format_rat(t: Fraction) -> str:
    t = Fraction(t)
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"


def mult_height(t) -> int:
    """Multiplicative height max(|a|, b) of t = a/b in lowest terms."""
    t = Fraction(t)
    return max(abs(t.numerator), t.denominator)


def primitive_integer_vector(coords: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The first nonzero entry of the result is positive.
    """
    fracs = [Fraction(c) for c in coords]
    if not fracs or all(c == 0 for c in fracs):
        raise InvalidInputError("projective point needs a nonzero coordinate")
    den = reduce(lcm, (c.denominator for c in fracs), 1)
    ints = [int(c * den) for c in fracs]
    g = reduce(gcd, ints, 0)
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@dataclass(frozen=True, init=False)
class ProjPoint:
    """A point of projective space over Q, stored in canonical integer form."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", primitive_integer_vector(list(coords)))

    def __len__(self):
        return len(self.coords)

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.coords)


def proj_height(point) -> int:
    """Height of a projective point given as a ProjPoint or a coordinate sequence."""
    if not isinstance(point, ProjPoint):
        point = ProjPoint(point)
    return point.height


def enumerate_rationals(B: int) -> list[Fraction]:
    """All rationals of multiplicative height at most B.

    Sorted by (height, numerator, denominator).
    """
    if int(B) != B or B < 1:
        raise InvalidInputError(f"height bound must be a positive integer, got {B!r}")
    B = int(B)
    out = [Fraction(0)]
    for b in range(1, B + 1):
        for a in range(1, B + 1):
            if gcd(a, b) == 1:
                out.append(Fraction(a, b))
                out.append(Fraction(-a, b))
    out.sort(key=lambda t: (mult_height(t), t.numerator, t.denominator))
    return out


def count_rationals(B: int) -> int:
    """Number of rationals of height at most B, via Euler's totient sum."""
    if B < 1:
        raise InvalidInputError("height bound must be positive")
    phi = list(range(B + 1))
    for i in range(2, B + 1):
        if phi[i] == i:
            for j in range(i, B + 1, i):
                phi[j] -= phi[j] // i
    # pairs (a, b) coprime with max(|a|, b) = n: 2 * (2 * phi(n)) for n >= 2
    return 3 + sum(4 * phi[n] for n in range(2, B + 1))
