"""
Point counts and Frobenius polynomials
======================================

Count points on y^2 = F(x) over F_p and F_{p^2}, then recover the
characteristic polynomial of Frobenius T^4 - c1 T^3 + c2 T^2 - p c1 T + p^2.
"""
from fractions import Fraction

from nonsimple.hyperelliptic import FamilySpec, GenusTwoCurve, count_points, frobenius_record, specialize

# an elliptic warm-up: y^2 = x^3 + 1 has 6 points over F_5
print(count_points(GenusTwoCurve((1, 0, 0, 1)), 5))

curve = GenusTwoCurve((1, 0, 0, 0, -1, 1))  # y^2 = x^5 - x + 1
for p in (3, 5, 7, 11, 13):
    rec = frobenius_record(curve, p)
    print(f"p={p:2d}  N1={rec.N1:3d}  N2={rec.N2:4d}  c1={rec.c1:3d}  c2={rec.c2:4d}  #J={rec.jacobian_order}")

# fibers of the family y^2 = (x^4 + 1)(x - t) get an integral model first
fam = FamilySpec("1,0,0,0,1")
c = specialize(fam, Fraction(2, 3))
print(c.F_coeffs, "y scaled by", c.y_scale)
print(frobenius_record(c, 7))
