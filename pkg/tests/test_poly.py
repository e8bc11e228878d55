import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings, strategies as st

from nonsimple import poly

x = sympy.symbols("x")
int_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=8).filter(lambda c: c[0] != 0)


def to_sympy(coeffs):
    return sympy.Poly(list(coeffs), x)


@settings(max_examples=150, deadline=None)
@given(int_polys, int_polys)
def test_resultant_matches_sylvester_det(p, q):
    # sympy.resultant has a sign slip when deg p < deg q, so compare to the raw determinant
    expected = sylvester(to_sympy(p).as_expr(), to_sympy(q).as_expr(), x).det()
    assert poly.resultant(p, q) == expected


@settings(max_examples=100, deadline=None)
@given(int_polys, int_polys)
def test_resultant_antisymmetry(p, q):
    sign = (-1) ** ((len(p) - 1) * (len(q) - 1))
    assert poly.resultant(p, q) == sign * poly.resultant(q, p)


@settings(max_examples=150, deadline=None)
@given(int_polys)
def test_discriminant_matches_sympy(p):
    assert poly.discriminant(p) == sympy.discriminant(to_sympy(p))


@settings(max_examples=150, deadline=None)
@given(int_polys)
def test_squarefree_iff_discriminant_nonzero(p):
    assert poly.is_squarefree(p) == (poly.discriminant(p) != 0)


def test_known_discriminants():
    assert poly.discriminant((1, 0, 0, 0, 1, 0)) == 256  # x^5 + x
    assert poly.discriminant((1, 0, 0, 0, -1, 0)) == -256  # x^5 - x
    assert poly.discriminant((1, 0, -3)) == 12


def test_mul_and_derivative():
    assert poly.mul((1, 0, 0, 0, 1), (1, 0)) == (1, 0, 0, 0, 1, 0)
    assert poly.derivative((1, 0, 0, 0, 1, 0)) == (5, 0, 0, 0, 1)
    assert poly.mul((), (1, 2)) == ()


def test_rational_resultant():
    from fractions import Fraction

    p = (Fraction(1, 2), 1)
    q = (1, 0, -1)
    assert poly.resultant(p, q) == Fraction(3, 4)  # (1/2)^2 * q(-2)


def test_gcd_poly():
    g = poly.gcd_poly(poly.mul((1, -1), (1, 2)), poly.mul((1, -1), (1, 3)))
    assert g == (1, -1)
