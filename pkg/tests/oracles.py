"""Brute-force oracles, written independently of the code paths they check."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import mpmath
import numpy as np


def brute_rationals(B):
    seen = set()
    for a in range(-B, B + 1):
        for b in range(1, B + 1):
            if gcd(a, b) == 1:
                seen.add(Fraction(a, b))
    return seen


def _poly_at(F, x, p):
    return sum(c * pow(x, len(F) - 1 - i, p) for i, c in enumerate(F)) % p


def naive_count_fp(F, p):
    """Count (x, y) in F_p^2 with y^2 = F(x) by a double loop, plus points at infinity."""
    affine = sum(1 for x in range(p) for y in range(p) if (y * y - _poly_at(F, x, p)) % p == 0)
    deg = len(F) - 1
    if deg % 2:
        return affine + 1
    lead_is_square = any((y * y - F[0]) % p == 0 for y in range(1, p))
    return affine + (2 if lead_is_square else 0)


class Fp2:
    """F_p[s]/(s^2 - r) using the largest non-residue r (the library uses the smallest)."""

    def __init__(self, p):
        self.p = p
        self.r = max(a for a in range(1, p) if pow(a, (p - 1) // 2, p) == p - 1)

    def mul(self, u, v):
        p, r = self.p, self.r
        return ((u[0] * v[0] + r * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    def elements(self):
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    def evaluate(self, F, x):
        acc = (0, 0)
        for c in F:
            acc = self.mul(acc, x)
            acc = ((acc[0] + c) % self.p, acc[1])
        return acc


def naive_count_fp2(F, p):
    """Count points over F_{p^2} from a table of how often each element is a square."""
    K = Fp2(p)
    square_count = {}
    for y in K.elements():
        z = K.mul(y, y)
        square_count[z] = square_count.get(z, 0) + 1
    affine = sum(square_count.get(K.evaluate(F, x), 0) for x in K.elements())
    deg = len(F) - 1
    if deg % 2:
        return affine + 1
    lead = (F[0] % p, 0)
    return affine + (2 if square_count.get(lead, 0) else 0)


def _polymod_p(a, b, p):
    """Remainder of a by monic b over F_p; lists highest degree first."""
    a = [x % p for x in a]
    while len(a) >= len(b):
        c = a[0]
        if c:
            for i in range(len(b)):
                a[i] = (a[i] - c * b[i]) % p
        a.pop(0)
    return a


def jacobian_order_mumford(F, p):
    """#J(F_p) for y^2 = F(x), deg F = 5, by counting reduced Mumford pairs (u, v)."""
    assert len(F) == 6
    F = [c % p for c in F]
    count = 1  # u = 1
    for a in range(p):  # u = x - a, v = b constant
        fa = _poly_at(F, a, p)
        count += sum(1 for b in range(p) if (b * b - fa) % p == 0)
    for u1 in range(p):
        for u0 in range(p):
            u = [1, u1, u0]
            for v1 in range(p):
                for v0 in range(p):
                    # F - v^2 with v = v1 x + v0
                    diff = list(F)
                    diff[-3] = (diff[-3] - v1 * v1) % p
                    diff[-2] = (diff[-2] - 2 * v1 * v0) % p
                    diff[-1] = (diff[-1] - v0 * v0) % p
                    if not any(_polymod_p(diff, u, p)):
                        count += 1
    return count


def sp_matrix_count(g, ell):
    """Number of 2g x 2g matrices A over F_l with A^T J A = J, by enumerating every matrix."""
    n = 2 * g
    J = np.zeros((n, n), dtype=np.int64)
    J[:g, g:] = np.eye(g, dtype=np.int64)
    J[g:, :g] = -np.eye(g, dtype=np.int64)
    mats = np.array(list(itertools.product(range(ell), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    prod = np.einsum("kji,jl,klm->kim", mats, J, mats)
    return int(np.all((prod - J) % ell == 0, axis=(1, 2)).sum())


def brute_quartic_reducible(P):
    """Search all (T^2+aT+b)(T^2+cT+d) with |b|, |d| <= |const|, plus all integer roots."""
    _, A1, A2, A3, A4 = P
    bound = abs(A4)
    if A4 == 0:
        return True
    for r in range(-bound, bound + 1):
        if sum(c * r ** (4 - i) for i, c in enumerate(P)) == 0:
            return True
    for b in range(-bound, bound + 1):
        if b == 0 or A4 % b:
            continue
        d = A4 // b
        # a + c = A1 and a d + b c = A3; scan a over a range that covers every root-size bound
        R = 2 * (1 + max(abs(A1), abs(A2), abs(A3), abs(A4)))
        for a in range(-R, R + 1):
            c = A1 - a
            if a * d + b * c == A3 and b + d + a * c == A2:
                return True
    return False


def root_pairing_reducible(P, dps=None):
    """Split the complex roots into every 1+3 and 2+2 grouping; test the rounded factor exactly."""
    coeffs = [int(c) for c in P]
    digits = max(len(str(abs(c))) for c in coeffs)
    with mpmath.workdps(dps or 2 * digits + 40):
        roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=4 * digits + 100)
        groups = [(i,) for i in range(4)] + [(0, 1), (0, 2), (0, 3)]
        for grp in groups:
            fac = [mpmath.mpf(1)]
            for i in grp:
                fac = [a - roots[i] * b for a, b in zip(fac + [0], [0] + fac)]
            ints = [int(mpmath.nint(mpmath.re(c))) for c in fac]
            if all(abs(mpmath.im(c)) < 0.5 for c in fac) and _divides(ints, coeffs):
                return True
    return False


def _divides(d, n):
    n = [Fraction(c) for c in n]
    while len(n) >= len(d):
        q = n[0] / d[0]
        for i in range(len(d)):
            n[i] -= q * d[i]
        n.pop(0)
    return not any(n)


def igusa_clebsch_from_roots(F, dps=60):
    """I2, I4, I6, I10 of a sextic from its roots, by the classical sums over root pairs."""
    assert len(F) == 7
    with mpmath.workdps(dps):
        a0 = F[0]
        r = mpmath.polyroots(F, maxsteps=400, extraprec=400)
        d = lambda i, j: (r[i] - r[j]) ** 2
        idx = list(range(6))

        def matchings(s):
            if not s:
                yield []
                return
            for b in s[1:]:
                rest = [x for x in s if x not in (s[0], b)]
                for m in matchings(rest):
                    yield [(s[0], b)] + m

        I2 = a0**2 * sum(d(*m[0]) * d(*m[1]) * d(*m[2]) for m in matchings(idx))
        I4 = 0
        I6 = 0
        for tri in itertools.combinations(idx, 3):
            if tri[0] != 0:
                continue
            i, j, k = tri
            rest = [x for x in idx if x not in tri]
            l, m, n = rest
            I4 += d(i, j) * d(j, k) * d(k, i) * d(l, m) * d(m, n) * d(n, l)
            for l, m, n in itertools.permutations(rest):
                I6 += d(i, j) * d(j, k) * d(k, i) * d(l, m) * d(m, n) * d(n, l) * d(i, l) * d(j, m) * d(k, n)
        I4 *= a0**4
        I6 *= a0**6
        I10 = a0**10 * mpmath.fprod(d(i, j) for i, j in itertools.combinations(idx, 2))
        return [Fraction(int(mpmath.nint(mpmath.re(x)))) for x in (I2, I4, I6, I10)]


def brute_subgroups(n, rank, max_gens):
    """All subgroups of (Z/n)^rank generated by at most max_gens elements, as frozensets of tuples."""
    elems = list(itertools.product(range(n), repeat=rank))
    found = set()
    for k in range(max_gens + 1):
        for gens in itertools.combinations(elems, k):
            span = {tuple([0] * rank)}
            frontier = list(span)
            while frontier:
                new = []
                for x in frontier:
                    for gvec in gens:
                        y = tuple((a + b) % n for a, b in zip(x, gvec))
                        if y not in span:
                            span.add(y)
                            new.append(y)
                frontier = new
            found.add(frozenset(span))
    return found


def std_pairing(u, v, g, n):
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g)) % n
