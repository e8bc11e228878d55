"""Igusa-Clebsch invariants of genus-2 curves and the height of their j-coordinates.

The invariants are computed from the binary sextic F(x, z) through Clebsch's
transvectant invariants A, B, C, D.  A quintic is treated as a sextic with
a root at infinity.  The j-coordinates are

    j1 = I4 I6' / I10,   j2 = I4^2 I12 / I10^2,   j3 = I4^5 / I10^2,

with I4, I6', I10, I12 in Streng's normalization:
I6' = (I2 I4 - 3 I6) / 2 and I12 = I2 I10.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidInputError
from .heights import proj_height
from .hyperelliptic import GenusTwoCurve

# A binary form is a dict {(i, j): coeff} for coeff * x^i * z^j, homogeneous of some degree.


def _binary_sextic(coeffs) -> dict:
    coeffs = tuple(coeffs)
    if len(coeffs) - 1 not in (5, 6):
        raise InvalidInputError("Igusa invariants need a quintic or sextic")
    padded = (0,) * (7 - len(coeffs)) + coeffs
    return {(6 - i, i): Fraction(c) for i, c in enumerate(padded) if c}


def _diff(f: dict, dx: int, dz: int) -> dict:
    out = {}
    for (i, j), c in f.items():
        if i >= dx and j >= dz:
            coeff = c * (factorial(i) // factorial(i - dx)) * (factorial(j) // factorial(j - dz))
            out[(i - dx, j - dz)] = coeff
    return out


def _mul(f: dict, g: dict) -> dict:
    out = defaultdict(Fraction)
    for (i1, j1), a in f.items():
        for (i2, j2), b in g.items():
            out[(i1 + i2, j1 + j2)] += a * b
    return {k: v for k, v in out.items() if v}


def transvectant(f: dict, f_deg: int, g: dict, g_deg: int, k: int) -> tuple[dict, int]:
    """(f, g)_k with the normalization (m-k)!(n-k)!/(m! n!); returns (form, degree)."""
    total = defaultdict(Fraction)
    for j in range(k + 1):
        term = _mul(_diff(f, k - j, j), _diff(g, j, k - j))
        sign = (-1) ** j * comb(k, j)
        for key, v in term.items():
            total[key] += sign * v
    scale = Fraction(factorial(f_deg - k) * factorial(g_deg - k), factorial(f_deg) * factorial(g_deg))
    return {key: v * scale for key, v in total.items() if v}, f_deg + g_deg - 2 * k


def _constant(form: dict) -> Fraction:
    return form.get((0, 0), Fraction(0))


def clebsch_invariants(coeffs) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    f = _binary_sextic(coeffs)
    i, _ = transvectant(f, 6, f, 6, 4)
    delta, _ = transvectant(i, 4, i, 4, 2)
    y1, _ = transvectant(f, 6, i, 4, 4)
    y2, _ = transvectant(i, 4, y1, 2, 2)
    y3, _ = transvectant(i, 4, y2, 2, 2)
    A = _constant(transvectant(f, 6, f, 6, 6)[0])
    B = _constant(transvectant(i, 4, i, 4, 4)[0])
    C = _constant(transvectant(i, 4, delta, 4, 4)[0])
    D = _constant(transvectant(y3, 2, y1, 2, 2)[0])
    return A, B, C, D


@dataclass(frozen=True)
class IgusaInvariants:
    I2: Fraction
    I4: Fraction
    I6: Fraction
    I10: Fraction

    @property
    def I6_prime(self) -> Fraction:
        return (self.I2 * self.I4 - 3 * self.I6) / 2

    @property
    def I12(self) -> Fraction:
        return self.I2 * self.I10

    @property
    def j1(self) -> Fraction:
        return self.I4 * self.I6_prime / self.I10

    @property
    def j2(self) -> Fraction:
        return self.I4**2 * self.I12 / self.I10**2

    @property
    def j3(self) -> Fraction:
        return self.I4**5 / self.I10**2

    @property
    def j(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.j1, self.j2, self.j3


def igusa_clebsch_from_clebsch(A, B, C, D) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    I2 = -120 * A
    I4 = -720 * A**2 + 6750 * B
    I6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    I10 = -62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D
    return I2, I4, I6, I10


def igusa_invariants(curve) -> IgusaInvariants:
    """Igusa-Clebsch invariants of y^2 = F(x); raises if F has a repeated root."""
    coeffs = curve.F_coeffs if isinstance(curve, GenusTwoCurve) else tuple(curve)
    inv = IgusaInvariants(*igusa_clebsch_from_clebsch(*clebsch_invariants(coeffs)))
    if inv.I10 == 0:
        raise InvalidInputError("I10 = 0: F is not squarefree")
    return inv


def j_height(curve) -> int:
    """Projective height of (j1 : j2 : j3 : 1)."""
    inv = igusa_invariants(curve)
    return proj_height((*inv.j, 1))
