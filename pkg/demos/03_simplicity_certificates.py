"""
Certificates of geometric simplicity
====================================

At a good ordinary prime p, if the Frobenius polynomial and the polynomials
of its k-th powers (k <= 60) are all irreducible over Q, the Jacobian is
geometrically simple.  y^2 = x^6 + 1 is known to split and never gets one.
"""
from nonsimple.classifier import classify_curve, quartic_irreducible
from nonsimple.hyperelliptic import GenusTwoCurve, charpoly_power

generic = classify_curve(GenusTwoCurve((1, 0, 0, 0, -1, 1)), 50)
print(generic.status, "at p =", generic.certificate.p)
polys = generic.certificate.charpolys()
for k in (1, 2, 3, 12):
    print(k, polys[k])

split = classify_curve(GenusTwoCurve((1, 0, 0, 0, 0, 0, 1)), 200)
print(split.status, "after", len(split.records), "good primes")
# why it fails: some power of Frobenius has a reducible polynomial
rec = split.records[0]
for k in range(1, 7):
    P = charpoly_power(rec.c1, rec.c2, rec.p, k)
    print(rec.p, k, P, quartic_irreducible(P))
