"""Certify geometric simplicity of fibers from Frobenius data at one good ordinary prime.

A fiber is reported as a candidate non-simple fiber when no prime below the
search bound yields a certificate.  Candidates are not proven non-simple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Optional, Union

from sympy import factorint, primerange

from .errors import DegenerateParameterError, InvalidInputError
from .heights import format_rat
from .hyperelliptic import (
    DEFAULT_LOOP_BOUND,
    FamilySpec,
    FrobeniusRecord,
    GenusTwoCurve,
    charpoly_power,
    frobenius_record,
    good_reduction,
    power_sums,
    specialize,
)
from . import poly

# If the reduction splits over F_{p^k}, some ratio of Frobenius eigenvalues is a
# primitive k-th root of unity in a field of degree <= 16, so phi(k) <= 16 and k <= 60.
DEFAULT_K_TEST = tuple(range(2, 61))


def is_ordinary(c1: int, c2: int, p: int) -> bool:
    return c2 % p != 0


@lru_cache(maxsize=1024)
def _positive_divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for prime, exp in factorint(n).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return tuple(sorted(divs))


def _signed_divisors(n: int):
    for d in _positive_divisors(abs(n)):
        yield d
        yield -d


def has_rational_root(P: tuple[int, ...]) -> bool:
    const = P[-1]
    if const == 0:
        return True
    return any(poly.evaluate(P, r) == 0 for r in _signed_divisors(const))


def has_quadratic_factor(P: tuple[int, ...]) -> bool:
    """Does monic P = T^4 + a T^3 + b T^2 + c T + d equal (T^2 + al T + be)(T^2 + ga T + de) over Z?"""
    _, a, b, c, d = P
    if d == 0:
        return True
    for be in _signed_divisors(d):
        de = d // be
        if be != de:
            num = c - be * a
            if num % (de - be):
                continue
            al = num // (de - be)
            ga = a - al
            if be + de + al * ga == b:
                return True
        else:
            if c != be * a:
                continue
            disc = a * a - 4 * (b - 2 * be)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r == disc and (a + r) % 2 == 0:
                return True
    return False


def quartic_irreducible(P) -> bool:
    """Irreducibility over Q of a monic integer quartic (highest coefficient first)."""
    P = tuple(int(c) for c in P)
    if len(P) != 5 or P[0] != 1:
        raise InvalidInputError("expected a monic quartic")
    return not has_rational_root(P) and not has_quadratic_factor(P)


@dataclass(frozen=True)
class Certificate:
    p: int
    c1: int
    c2: int
    k_checked: tuple[int, ...]

    def charpolys(self) -> dict[int, tuple[int, ...]]:
        sums = power_sums(self.c1, self.c2, self.p, 4 * max(self.k_checked))
        return {k: charpoly_power(self.c1, self.c2, self.p, k, sums) for k in self.k_checked}


def _k_list(K_test: Iterable[int]) -> tuple[int, ...]:
    ks = sorted({1, *(int(k) for k in K_test)})
    if ks[0] < 1:
        raise InvalidInputError("K_test entries must be positive")
    return tuple(ks)


def certificate_from_record(rec: FrobeniusRecord, K_test: Iterable[int] = DEFAULT_K_TEST) -> Optional[Certificate]:
    if not is_ordinary(rec.c1, rec.c2, rec.p):
        return None
    ks = _k_list(K_test)
    sums = power_sums(rec.c1, rec.c2, rec.p, 4 * ks[-1])
    for k in ks:
        if not quartic_irreducible(charpoly_power(rec.c1, rec.c2, rec.p, k, sums)):
            return None
    return Certificate(rec.p, rec.c1, rec.c2, ks)


def certify_geometrically_simple(
    curve: GenusTwoCurve,
    p: int,
    K_test: Iterable[int] = DEFAULT_K_TEST,
    loop_bound: int = DEFAULT_LOOP_BOUND,
) -> Optional[Certificate]:
    """A certificate that the reduction mod p, hence the curve's Jacobian, is geometrically simple."""
    if not good_reduction(curve, p):
        return None
    return certificate_from_record(frobenius_record(curve, p, loop_bound), K_test)


@dataclass(frozen=True)
class CertifiedSimple:
    certificate: Certificate
    records: tuple[FrobeniusRecord, ...] = ()

    status = "simple"


@dataclass(frozen=True)
class CandidateNonSimple:
    records: tuple[FrobeniusRecord, ...]

    status = "candidate"


@dataclass(frozen=True)
class Degenerate:
    records: tuple = field(default=(), repr=False)

    status = "degenerate"


Classification = Union[CertifiedSimple, CandidateNonSimple, Degenerate]


def certifying_prime(c: Classification) -> Optional[int]:
    return c.certificate.p if isinstance(c, CertifiedSimple) else None


def primes_tested(c: Classification) -> int:
    """Number of good-reduction primes at which Frobenius data was computed."""
    return len(c.records)


def classify_curve(
    curve: GenusTwoCurve,
    P_max: int,
    K_test: Iterable[int] = DEFAULT_K_TEST,
    loop_bound: int = DEFAULT_LOOP_BOUND,
) -> Classification:
    if P_max < 3:
        raise InvalidInputError("P_max must be at least 3")
    ks = _k_list(K_test)
    records = []
    for p in primerange(3, P_max + 1):
        p = int(p)
        if not good_reduction(curve, p):
            continue
        rec = frobenius_record(curve, p, loop_bound)
        records.append(rec)
        cert = certificate_from_record(rec, ks)
        if cert is not None:
            return CertifiedSimple(cert, tuple(records))
    return CandidateNonSimple(tuple(records))


def classify_parameter(
    family: FamilySpec,
    t,
    P_max: int,
    K_test: Iterable[int] = DEFAULT_K_TEST,
    loop_bound: int = DEFAULT_LOOP_BOUND,
) -> Classification:
    """Classify the fiber at t; primes are tried in increasing order and the first certificate wins."""
    if family.genus != 2:
        raise InvalidInputError("classification supports genus 2 (deg f = 4) only")
    try:
        curve = specialize(family, Fraction(t))
    except DegenerateParameterError:
        return Degenerate()
    return classify_curve(curve, P_max, K_test, loop_bound)


CSV_COLUMNS = ("t", "status", "certifying_prime", "primes_tested")


def classification_row(t, c: Classification) -> dict[str, str]:
    cp = certifying_prime(c)
    return {
        "t": format_rat(t),
        "status": c.status,
        "certifying_prime": "" if cp is None else str(cp),
        "primes_tested": str(primes_tested(c)),
    }
