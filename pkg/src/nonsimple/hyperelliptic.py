"""Point counting on y^2 = F(x) over F_p and F_{p^2}, and genus-2 Frobenius data."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import poly
from .errors import (
    BadReductionError,
    ConsistencyError,
    DegenerateParameterError,
    InvalidInputError,
    ResourceLimitError,
    UnsupportedPrimeError,
)
from .heights import format_rat

DEFAULT_LOOP_BOUND = 250_000


def _parse_coeffs(coeffs) -> tuple[int, ...]:
    if isinstance(coeffs, str):
        try:
            coeffs = [int(c) for c in coeffs.replace(" ", "").split(",") if c != ""]
        except ValueError as exc:
            raise InvalidInputError(f"bad coefficient list {coeffs!r}") from exc
    out = []
    for c in coeffs:
        if Fraction(c).denominator != 1:
            raise InvalidInputError("coefficients must be integers")
        out.append(int(c))
    return poly.trim(out)


@dataclass(frozen=True)
class FamilySpec:
    """The family y^2 = f(x)(x - t); ``f_coeffs`` is highest degree first."""

    f_coeffs: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        coeffs = _parse_coeffs(self.f_coeffs)
        if len(coeffs) < 2:
            raise InvalidInputError("f must be nonconstant")
        if not poly.is_squarefree(coeffs):
            raise InvalidInputError(f"f = {coeffs} is not squarefree")
        object.__setattr__(self, "f_coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def genus(self) -> int:
        return self.degree // 2

    def is_root(self, t) -> bool:
        return poly.evaluate(self.f_coeffs, Fraction(t)) == 0


@dataclass(frozen=True)
class GenusTwoCurve:
    """y^2 = F(x) with integer F of degree 5 or 6 (degree 3 allowed for counting only).

    ``y_scale`` records the substitution y -> y / y_scale that related this
    integral model to the rational one it came from.
    """

    F_coeffs: tuple[int, ...]
    y_scale: int = 1

    def __post_init__(self):
        coeffs = _parse_coeffs(self.F_coeffs)
        if len(coeffs) - 1 not in (3, 5, 6):
            raise InvalidInputError(f"degree {len(coeffs) - 1} not in {{3, 5, 6}}")
        if not poly.is_squarefree(coeffs):
            raise InvalidInputError(f"F = {coeffs} is not squarefree")
        object.__setattr__(self, "F_coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.F_coeffs) - 1

    @property
    def genus(self) -> int:
        return (self.degree - 1) // 2

    @property
    def discriminant(self) -> int:
        return _disc(self.F_coeffs)


@lru_cache(maxsize=4096)
def _disc(coeffs: tuple[int, ...]) -> int:
    return poly.discriminant(coeffs)


def specialize(family: FamilySpec, t) -> GenusTwoCurve:
    """Integral model of y^2 = f(x)(x - t).

    For t = a/b this is y^2 = b f(x) (b x - a), obtained from the rational
    model by y -> b y, so it is isomorphic over Q.
    """
    t = Fraction(t)
    if family.is_root(t):
        raise DegenerateParameterError(f"t = {format_rat(t)} is a root of f")
    a, b = t.numerator, t.denominator
    F = poly.mul(poly.scale(family.f_coeffs, b), (b, -a))
    return GenusTwoCurve(F, y_scale=b)


def _check_prime(p: int) -> None:
    if p == 2:
        raise UnsupportedPrimeError("p = 2 is not supported")
    if p < 2:
        raise InvalidInputError(f"{p} is not a prime")


def good_reduction(curve: GenusTwoCurve, p: int) -> bool:
    """True iff p does not divide the leading coefficient or the discriminant of F."""
    _check_prime(p)
    return curve.F_coeffs[0] % p != 0 and curve.discriminant % p != 0


@lru_cache(maxsize=256)
def quadratic_character_table(p: int) -> np.ndarray:
    """chi(a) for a in F_p by Euler's criterion, with chi(0) = 0."""
    e = (p - 1) // 2
    table = np.empty(p, dtype=np.int64)
    for a in range(p):
        r = pow(a, e, p)
        table[a] = -1 if r == p - 1 else r
    table.flags.writeable = False
    return table


@lru_cache(maxsize=256)
def smallest_nonresidue(p: int) -> int:
    chi = quadratic_character_table(p)
    return int(np.argmax(chi == -1))


def _evaluate_all_fp(coeffs: Sequence[int], p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        acc = (acc * x + c % p) % p
    return acc


def _evaluate_all_fp2(coeffs: Sequence[int], p: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate F at every a + b*s in F_p[s]/(s^2 - r); returns the two components."""
    a = np.repeat(np.arange(p, dtype=np.int64), p)
    b = np.tile(np.arange(p, dtype=np.int64), p)
    u0 = np.zeros(p * p, dtype=np.int64)
    u1 = np.zeros(p * p, dtype=np.int64)
    for c in coeffs:
        u0, u1 = (u0 * a + (u1 * b % p) * r + c % p) % p, (u0 * b + u1 * a) % p
    return u0, u1


def count_points(curve: GenusTwoCurve, p: int, k: int = 1, loop_bound: int = DEFAULT_LOOP_BOUND) -> int:
    """Number of points of the smooth projective model over F_{p^k}, k in {1, 2}."""
    _check_prime(p)
    if k not in (1, 2):
        raise InvalidInputError("only k = 1 and k = 2 are supported")
    if p**k > loop_bound:
        raise ResourceLimitError(f"p^k = {p**k} exceeds the loop bound {loop_bound}")
    if not good_reduction(curve, p):
        raise BadReductionError(f"bad reduction at p = {p}")
    chi = quadratic_character_table(p)
    F = curve.F_coeffs
    q = p**k
    if k == 1:
        char_sum = int(chi[_evaluate_all_fp(F, p)].sum())
        lead_chi = int(chi[F[0] % p])
    else:
        r = smallest_nonresidue(p)
        u0, u1 = _evaluate_all_fp2(F, p, r)
        # z is a square in F_{p^2} iff its norm is a square in F_p
        norm = (u0 * u0 - r * (u1 * u1 % p)) % p
        char_sum = int(chi[norm].sum())
        lead_chi = 1  # every element of F_p is a square in F_{p^2}
    affine = q + char_sum
    if curve.degree % 2:
        infinity = 1
    else:
        infinity = 1 + lead_chi
    n = affine + infinity
    bound = 2 * curve.genus * math.sqrt(q)
    if abs(n - q - 1) > bound:
        raise ConsistencyError(f"count {n} over F_{q} violates the Weil bound")
    return n


@dataclass(frozen=True)
class FrobeniusRecord:
    """Point counts at p and the characteristic polynomial
    T^4 - c1 T^3 + c2 T^2 - p c1 T + p^2 of Frobenius."""

    p: int
    N1: int
    N2: int
    c1: int
    c2: int

    @property
    def charpoly(self) -> tuple[int, ...]:
        return weil_polynomial(self.c1, self.c2, self.p)

    @property
    def jacobian_order(self) -> int:
        return poly.evaluate(self.charpoly, 1)


def weil_polynomial(c1: int, c2: int, p: int) -> tuple[int, ...]:
    return (1, -c1, c2, -p * c1, p * p)


def frobenius_charpoly(N1: int, N2: int, p: int) -> tuple[int, int]:
    """(c1, c2) from the counts over F_p and F_{p^2}; raises on inconsistent counts."""
    c1 = p + 1 - N1
    s2 = p * p + 1 - N2
    twice_c2 = c1 * c1 - s2
    if twice_c2 % 2:
        raise ConsistencyError(f"parity failure at p = {p}: c1^2 - s2 = {twice_c2} is odd")
    c2 = twice_c2 // 2
    if c1 * c1 > 16 * p:
        raise ConsistencyError(f"|c1| = {abs(c1)} exceeds 4 sqrt({p})")
    # Weil-polynomial range for the middle coefficient of a genus-2 curve
    if not (2 * math.isqrt(p * c1 * c1) - 2 * p - 1 <= c2 <= c1 * c1 // 4 + 2 * p):
        raise ConsistencyError(f"c2 = {c2} outside the Weil range at p = {p}")
    if poly.evaluate(weil_polynomial(c1, c2, p), 1) <= 0:
        raise ConsistencyError("P(1) must be positive")
    return c1, c2


def frobenius_record(curve: GenusTwoCurve, p: int, loop_bound: int = DEFAULT_LOOP_BOUND) -> FrobeniusRecord:
    if curve.genus != 2:
        raise InvalidInputError("Frobenius records need a genus-2 curve")
    N1 = count_points(curve, p, 1, loop_bound)
    N2 = count_points(curve, p, 2, loop_bound)
    c1, c2 = frobenius_charpoly(N1, N2, p)
    return FrobeniusRecord(p, N1, N2, c1, c2)


def power_sums(c1: int, c2: int, p: int, n: int) -> list[int]:
    """s_0..s_n, the power sums of the roots of T^4 - c1 T^3 + c2 T^2 - p c1 T + p^2."""
    e = (c1, c2, p * c1, p * p)  # elementary symmetric functions
    s = [4]
    for j in range(1, n + 1):
        if j <= 4:
            # Newton: s_j = e1 s_{j-1} - e2 s_{j-2} + e3 s_{j-3} - ... + (-1)^{j-1} j e_j
            val = (-1) ** (j - 1) * j * e[j - 1]
            for i in range(1, j):
                val += (-1) ** (i - 1) * e[i - 1] * s[j - i]
        else:
            val = c1 * s[j - 1] - c2 * s[j - 2] + p * c1 * s[j - 3] - p * p * s[j - 4]
        s.append(val)
    return s


def charpoly_power(c1: int, c2: int, p: int, k: int, sums: list[int] | None = None) -> tuple[int, ...]:
    """prod (T - alpha_i^k) where alpha_i are the roots of the Weil polynomial."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    if sums is None or len(sums) <= 4 * k:
        sums = power_sums(c1, c2, p, 4 * k)
    S1, S2, S3, S4 = sums[k], sums[2 * k], sums[3 * k], sums[4 * k]
    e1 = S1
    e2 = (e1 * S1 - S2) // 2
    e3 = (e2 * S1 - e1 * S2 + S3) // 3
    e4 = (e3 * S1 - e2 * S2 + e1 * S3 - S4) // 4
    return (1, -e1, e2, -e3, e4)
