"""
Rationals of bounded height
===========================

Enumerate every t = a/b with max(|a|, b) <= B and compare the count with
the closed form 3 + 4 * sum_{n=2}^{B} phi(n).
"""
from fractions import Fraction

from nonsimple.heights import count_rationals, enumerate_rationals, mult_height, proj_height

ts = enumerate_rationals(3)
print(len(ts), "rationals of height <= 3:")
print(" ".join(str(t) for t in ts))

# the count grows like (12 / pi^2) B^2
for B in (10, 100, 400):
    n = len(enumerate_rationals(B))
    print(B, n, count_rationals(B), round(n / B**2, 4))

print(mult_height(Fraction(-22, 7)))
# projective height clears denominators first: (1/2 : 3 : 1) ~ (1 : 6 : 2)
print(proj_height([Fraction(1, 2), 3, 1]))
