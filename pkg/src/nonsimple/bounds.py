"""Log-space evaluation of the cover-degree / height-lift / point-count bound chain.

Every bound is returned as a natural logarithm.  Height bounds B are passed
as ``log_B`` so that values like B = e^(10^6) stay representable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from sympy import nextprime

from .errors import BelowThresholdError, InvalidInputError
from .symplectic import block_diag_index, lagrangian_count


@dataclass(frozen=True)
class BoundParams:
    """Constants of the bound chain.

    kappa, c, C_iota, C_prime and ell0 are not effective in the underlying
    theory; the defaults are placeholders and only the shape of the bounds is
    meaningful.
    """

    g: int = 2
    gB: int = 1
    gC: int = 1
    d: int = 1
    d_K: int = 1
    c: float = 1.0
    kappa: float = 4.0
    C_iota: float = 1.0
    C_prime: float = 1.0
    ell0: int = 5

    def __post_init__(self):
        if self.g < 1 or self.d < 1 or self.d_K < 1:
            raise InvalidInputError("g, d and d_K must be positive integers")
        if self.c <= 0 or self.C_iota <= 0 or self.C_prime <= 0 or self.ell0 < 1:
            raise InvalidInputError("constants must be positive")
        if self.kappa < 0:
            raise InvalidInputError("kappa must be nonnegative")


@dataclass(frozen=True)
class CoverCase:
    """Which congruence cover: 'diagonal' (with gB <= gC), 'parabolic' or 'fourth'."""

    variant: str
    gB: Optional[int] = None
    gC: Optional[int] = None

    def __post_init__(self):
        if self.variant not in ("diagonal", "parabolic", "fourth"):
            raise InvalidInputError(f"unknown cover case {self.variant!r}")
        if self.variant == "diagonal":
            if self.gB is None or self.gC is None or not 1 <= self.gB <= self.gC:
                raise InvalidInputError("diagonal case needs 1 <= gB <= gC")

    @classmethod
    def diagonal(cls, gB: int, gC: int) -> "CoverCase":
        return cls("diagonal", gB, gC)

    def genus(self, params: BoundParams) -> int:
        """Genus entering the formulas: g, or 4g for the fourth-power case."""
        if self.variant == "diagonal" and self.gB + self.gC != params.g:
            raise InvalidInputError(f"gB + gC = {self.gB + self.gC} != g = {params.g}")
        return 4 * params.g if self.variant == "fourth" else params.g

    def level_exponent_inverse(self, params: BoundParams) -> int:
        """q with l ~ (log B)^(1/q): 4 gB gC, or (g^2 + g)/2 with the substituted genus."""
        g = self.genus(params)
        if self.variant == "diagonal":
            return 4 * self.gB * self.gC
        return (g * g + g) // 2

    def __str__(self):
        if self.variant == "diagonal":
            return f"diagonal({self.gB},{self.gC})"
        return self.variant


PARABOLIC = CoverCase("parabolic")
FOURTH_POWER = CoverCase("fourth")


def all_cases(g: int) -> list[CoverCase]:
    return [CoverCase.diagonal(gB, g - gB) for gB in range(1, g // 2 + 1)] + [PARABOLIC, FOURTH_POWER]


def moduli_dims(g: int) -> tuple[int, int]:
    """(N, M) = (dim A_g + 1, dim A_{8g})."""
    if g < 1:
        raise InvalidInputError("g must be positive")
    return g * (g + 1) // 2 + 1, 4 * g * (8 * g + 1)


def cover_index(case: CoverCase, params: BoundParams, ell: int) -> int:
    g = case.genus(params)
    if case.variant == "diagonal":
        return block_diag_index(g, case.gB, ell)
    return lagrangian_count(g, ell)


def cover_degree(case: CoverCase, params: BoundParams, ell: int) -> int:
    """d * binom(N + M, N) * [Sp_2g(F_l) : H], exactly."""
    N, M = moduli_dims(case.genus(params))
    return params.d * math.comb(N + M, N) * cover_index(case, params, ell)


def cover_degree_log(case: CoverCase, params: BoundParams, ell: int) -> float:
    N, M = moduli_dims(case.genus(params))
    return math.log(params.d) + math.log(math.comb(N + M, N)) + math.log(cover_index(case, params, ell))


def height_lift_bound_log(log_B: float, params: BoundParams, ell: int, g: Optional[int] = None) -> float:
    """log(C_iota * l^(4g) * B^(9d))."""
    if log_B < 0:
        raise InvalidInputError("B must be at least 1")
    g = params.g if g is None else g
    return math.log(params.C_iota) + 4 * g * math.log(ell) + 9 * params.d * log_B


def bck_bound_log(deg_curve: int, height_log: float, params: BoundParams) -> float:
    """log(c * D^2 * H^(2 d_K / D) * (log H)^kappa) for a curve of degree D and height bound H."""
    if deg_curve < 1:
        raise InvalidInputError("curve degree must be positive")
    if height_log <= math.log(2):
        raise InvalidInputError("height bound must exceed 2")
    return (
        math.log(params.c)
        + 2 * math.log(deg_curve)
        + (2 * params.d_K / deg_curve) * height_log
        + params.kappa * math.log(height_log)
    )


def log_B0(case: CoverCase, params: BoundParams) -> float:
    """log of the smallest admissible B: ell0^q."""
    return float(params.ell0 ** case.level_exponent_inverse(params))


def optimize_level(log_B: float, case: CoverCase, params: BoundParams) -> int:
    """Smallest prime >= max(ell0, ceil((log B)^(1/q)))."""
    q = case.level_exponent_inverse(params)
    threshold = params.ell0**q
    if log_B < threshold:
        raise BelowThresholdError(
            f"log B = {log_B:g} is below log B0 = {params.ell0}^{q} for case {case}", float(threshold)
        )
    n = max(1, int(log_B ** (1.0 / q)))
    while n**q < log_B:
        n += 1
    while n > 1 and (n - 1) ** q >= log_B:
        n -= 1
    target = max(params.ell0, n, 2)
    return int(nextprime(target - 1))


@dataclass(frozen=True)
class CaseBound:
    case: CoverCase
    ell: int
    cover_degree_log: float
    height_log: float
    bound_log: float


def case_bound(log_B: float, case: CoverCase, params: BoundParams) -> CaseBound:
    ell = optimize_level(log_B, case, params)
    g = case.genus(params)
    deg = cover_degree(case, params, ell)
    h = height_lift_bound_log(log_B, params, ell, g=g)
    return CaseBound(case, ell, math.log(deg), h, bck_bound_log(deg, h, params))


def s_bound_log(log_B: float, case: CoverCase, params: BoundParams) -> float:
    """Bound on lifted points for one cover case, with the level chosen by optimize_level."""
    return case_bound(log_B, case, params).bound_log


def logsumexp(values: Iterable[float]) -> float:
    values = list(values)
    top = max(values)
    return top + math.log(sum(math.exp(v - top) for v in values))


def total_bound_log(log_B: float, params: BoundParams) -> float:
    """log of the sum of the case bounds over every cover case for genus g."""
    return logsumexp(s_bound_log(log_B, case, params) for case in all_cases(params.g))


def eehk_bound_log(log_B: float, g: int, C: float = 1.0, D: float = 1.0) -> float:
    """log(C * (g^2 D log(2B))^(11 g^2))."""
    if log_B < 0 or C <= 0 or D < 1:
        raise InvalidInputError("need B >= 1, C > 0, D >= 1")
    return math.log(C) + 11 * g * g * (2 * math.log(g) + math.log(D) + math.log(math.log(2) + log_B))


def parse_log_B(text: str) -> float:
    """'e1000' means B = e^1000; anything else is B itself."""
    text = text.strip()
    try:
        if text[:1] in ("e", "E"):
            return float(text[1:])
        B = float(text)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse B = {text!r}") from exc
    if B < 1:
        raise InvalidInputError("B must be at least 1")
    return math.log(B)
