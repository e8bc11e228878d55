"""
Igusa-Clebsch invariants
========================

Invariants of the sextic, the absolute j-coordinates, and the height of
(j1 : j2 : j3 : 1) along a family.
"""
from fractions import Fraction

from nonsimple.heights import enumerate_rationals
from nonsimple.hyperelliptic import FamilySpec, specialize
from nonsimple.igusa import igusa_invariants, j_height

inv = igusa_invariants((1, 0, 0, 0, 0, 0, 1))
print(inv.I2, inv.I4, inv.I6, inv.I10)
print(inv.j)

# j is unchanged by x -> 1/x and by twisting F -> 3F
F = (2, -1, 3, 0, 1, 1, -4)
print(igusa_invariants(F).j == igusa_invariants(F[::-1]).j == igusa_invariants([3 * c for c in F]).j)

fam = FamilySpec("1,0,0,0,1")
for t in enumerate_rationals(2):
    print(t, j_height(specialize(fam, t)))
print(j_height(specialize(fam, Fraction(7, 5))))
