"""Finite symplectic modules (Z/l^m)^{2g} and exhaustive checks on their isotropic subgroups.

The module has basis e_1..e_g, f_1..f_g with <e_i, f_i> = 1.  Vectors are
integer tuples of length 2g reduced mod l^m.  Subgroups are handled as
explicit element sets, which is practical up to a few thousand elements.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import isprime

from .errors import ConsistencyError, InvalidInputError, ResourceLimitError

DEFAULT_ENUMERATION_BOUND = 4096


@dataclass(frozen=True)
class SympModule:
    g: int
    ell: int
    m: int = 1

    def __post_init__(self):
        if self.g < 1 or self.m < 1:
            raise InvalidInputError("g and m must be positive")
        if not isprime(self.ell):
            raise InvalidInputError(f"ell = {self.ell} is not prime")

    @property
    def n(self) -> int:
        return self.ell**self.m

    @property
    def rank(self) -> int:
        return 2 * self.g

    @property
    def size(self) -> int:
        return self.n**self.rank

    @cached_property
    def gram(self) -> np.ndarray:
        g = self.g
        J = np.zeros((2 * g, 2 * g), dtype=np.int64)
        J[:g, g:] = np.eye(g, dtype=np.int64)
        J[g:, :g] = -np.eye(g, dtype=np.int64)
        return J

    def vector(self, v: Iterable[int]) -> tuple[int, ...]:
        v = tuple(int(x) % self.n for x in v)
        if len(v) != self.rank:
            raise InvalidInputError(f"expected a vector of length {self.rank}, got {len(v)}")
        return v

    def basis_vector(self, kind: str, i: int) -> tuple[int, ...]:
        """e_i (kind 'e') or f_i (kind 'f'), 1-indexed."""
        v = [0] * self.rank
        v[i - 1 if kind == "e" else self.g + i - 1] = 1
        return tuple(v)

    def elements(self) -> np.ndarray:
        """All elements as rows, in lexicographic order (row index = base-n code)."""
        return self._rows

    @cached_property
    def _rows(self) -> np.ndarray:
        rows = np.indices((self.n,) * self.rank).reshape(self.rank, -1).T.astype(np.int64)
        rows.flags.writeable = False
        return rows

    def _check_bound(self, bound: int) -> None:
        if self.size > bound:
            raise ResourceLimitError(f"module of size {self.size} exceeds the enumeration bound {bound}")

    def codes(self, rows: np.ndarray) -> np.ndarray:
        weights = self.n ** np.arange(self.rank - 1, -1, -1, dtype=np.int64)
        return (rows % self.n) @ weights

    def torsion(self, j: int) -> frozenset:
        """Codes of M[l^j] = l^{m-j} M."""
        rows = self.elements()
        mask = np.all((rows * self.ell**j) % self.n == 0, axis=1)
        return frozenset(self.codes(rows[mask]).tolist())


def pairing(M: SympModule, u: Sequence[int], v: Sequence[int]) -> int:
    """<u, v> = sum_i (u_i v_{g+i} - u_{g+i} v_i) mod l^m."""
    u, v = M.vector(u), M.vector(v)
    g = M.g
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g)) % M.n


def pairing_matrix(M: SympModule, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """All pairings between rows of U and rows of V, mod l^m."""
    return (np.asarray(U, dtype=np.int64) @ M.gram @ np.asarray(V, dtype=np.int64).T) % M.n


def _lift_torsion(M: SympModule, u: tuple[int, ...], rng=None) -> np.ndarray:
    """A preimage a with l^{m-1} a = u; random if rng is given."""
    step = M.ell ** (M.m - 1)
    if any(x % step for x in u):
        raise InvalidInputError(f"{u} is not l-torsion")
    a = np.array([x // step for x in u], dtype=np.int64)
    if rng is not None and M.m > 1:
        # anything killed by l^{m-1} can be added: that is l * M
        a = a + M.ell * rng.integers(0, M.n, size=M.rank)
    return a % M.n


def induced_mod_ell_pairing(M: SympModule, u: Sequence[int], v: Sequence[int], rng=None) -> int:
    """The pairing on M[l] induced from M: <a, b> * l^{m-1}, read in Z/l, for lifts a, b."""
    u, v = M.vector(u), M.vector(v)
    a = _lift_torsion(M, u, rng)
    b = _lift_torsion(M, v, rng)
    value = int(pairing_matrix(M, a[None, :], b[None, :])[0, 0]) * M.ell ** (M.m - 1) % M.n
    return value // M.ell ** (M.m - 1)


def verify_scaling_identity(M: SympModule, s: int, t: int, pairs: Optional[np.ndarray] = None) -> bool:
    """Check t * <u, v>_{st} = <t u, t v>_s on all pairs (or on given index pairs).

    t * M is identified with (Z/s)^{2g} by dividing coordinates by t.
    """
    if s * t != M.n or s < 1 or t < 1:
        raise InvalidInputError(f"s * t must equal l^m = {M.n}")
    rows = M.elements()
    if pairs is None:
        left = pairing_matrix(M, rows, rows)
        # values of t*<u,v> lie in t Z/st, identified with Z/s by dividing by t
        lhs = (left * t % M.n) // t
        tu = (rows * t) % M.n // t  # coordinates of t*u in (Z/s)^{2g}
        rhs = (tu @ M.gram @ tu.T) % s
        return bool(np.array_equal(lhs, rhs))
    U, V = rows[pairs[:, 0]], rows[pairs[:, 1]]
    lhs = (np.einsum("ij,jk,ik->i", U, M.gram, V) % M.n * t % M.n) // t
    tU, tV = (U * t) % M.n // t, (V * t) % M.n // t
    rhs = np.einsum("ij,jk,ik->i", tU, M.gram, tV) % s
    return bool(np.array_equal(lhs, rhs))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup in echelon normal form.

    Row j has pivot column ``pivots[j]`` with entry l^{e_j} and zeros before
    it; among all elements with that shape the lexicographically smallest is
    chosen, which makes the form unique for the subgroup.
    """

    module: SympModule = field(repr=False)
    gens: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def order(self) -> int:
        n = self.module.n
        return prod(n // row[c] for row, c in zip(self.gens, self.pivots))

    def elements(self) -> frozenset:
        return span_codes(self.module, np.array(self.gens, dtype=np.int64).reshape(-1, self.module.rank))


def span_codes(M: SympModule, gens: np.ndarray) -> frozenset:
    """Codes of all elements of the subgroup generated by the rows of gens."""
    rows = M.elements()
    current = np.zeros((1, M.rank), dtype=np.int64)
    for gvec in np.asarray(gens, dtype=np.int64).reshape(-1, M.rank):
        mult = (np.arange(M.n, dtype=np.int64)[:, None] * gvec[None, :]) % M.n
        current = ((current[:, None, :] + mult[None, :, :]) % M.n).reshape(-1, M.rank)
        current = rows[np.unique(M.codes(current))]
    return frozenset(M.codes(current).tolist())


def normal_form(M: SympModule, codes: frozenset) -> Subgroup:
    rows = M.elements()
    W = rows[np.array(sorted(codes), dtype=np.int64)]  # sorted codes give lexicographic order
    gens, pivots = [], []
    active = W
    for col in range(M.rank):
        active = active[np.all(active[:, :col] == 0, axis=1)] if col else active
        vals = active[:, col]
        nonzero = vals[vals != 0]
        if nonzero.size == 0:
            continue
        # the column values form l^e Z/l^m; its generator is the smallest l-power present
        e = min(_ell_valuation(int(x), M.ell) for x in nonzero)
        target = M.ell**e
        choice = active[vals == target][0]
        gens.append(tuple(int(x) for x in choice))
        pivots.append(col)
    return Subgroup(M, tuple(gens), tuple(pivots))


def _ell_valuation(x: int, ell: int) -> int:
    v = 0
    while x % ell == 0:
        x //= ell
        v += 1
    return v


def subgroup(M: SympModule, gens: Iterable[Sequence[int]]) -> Subgroup:
    gens = np.array([M.vector(g) for g in gens], dtype=np.int64).reshape(-1, M.rank)
    return normal_form(M, span_codes(M, gens))


def is_isotropic(M: SympModule, codes: Iterable[int]) -> bool:
    rows = M.elements()[np.array(sorted(codes), dtype=np.int64)]
    return not pairing_matrix(M, rows, rows).any()


def enumerate_isotropic_subgroups(M: SympModule, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[list[frozenset]]:
    """All isotropic subgroups, grouped by order: level j holds those of order l^j.

    Each subgroup of order l^{j+1} arises from one of order l^j by adjoining
    an element v with l v already inside, so a breadth-first walk over these
    one-step extensions reaches every isotropic subgroup.
    """
    M._check_bound(bound)
    rows = M.elements()
    levels = [[frozenset([0])]]
    for _ in range(M.m * M.g):
        children = {}
        for W in levels[-1]:
            w_rows = rows[np.array(sorted(W), dtype=np.int64)]
            perp = ~pairing_matrix(M, rows, w_rows).any(axis=1)
            in_W = np.zeros(len(rows), dtype=bool)
            in_W[list(W)] = True
            ell_v_in_W = in_W[M.codes(rows * M.ell)]
            candidates = np.flatnonzero(perp & ell_v_in_W & ~in_W)
            used = np.zeros(len(rows), dtype=bool)
            for idx in candidates:
                if used[idx]:
                    continue
                v = rows[idx]
                shifted = (w_rows[None, :, :] + np.arange(M.ell)[:, None, None] * v) % M.n
                child = frozenset(M.codes(shifted.reshape(-1, M.rank)).tolist())
                used[list(child)] = True
                children.setdefault(child, None)
        levels.append(list(children))
    return levels


def enumerate_maximal_isotropic(M: SympModule, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Subgroup]:
    """All isotropic subgroups of order l^{mg}, in normal form, sorted by their generators."""
    top = enumerate_isotropic_subgroups(M, bound)[-1]
    forms = [normal_form(M, W) for W in top]
    if len({(f.gens, f.pivots) for f in forms}) != len(forms):
        raise ConsistencyError("normal form failed to separate distinct subgroups")
    return sorted(forms, key=lambda f: (f.pivots, f.gens))


def isotropic_subspaces(M: SympModule, k: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Subgroup]:
    """Isotropic k-dimensional subspaces of F_l^{2g} (requires m = 1)."""
    if M.m != 1:
        raise InvalidInputError("subspaces need m = 1")
    if not 0 <= k <= M.g:
        raise InvalidInputError("k out of range")
    level = enumerate_isotropic_subgroups(M, bound)[k]
    return sorted((normal_form(M, W) for W in level), key=lambda f: (f.pivots, f.gens))


@dataclass
class KernelLemmaReport:
    g: int
    ell: int
    m: int
    subgroups: int = 0
    full_torsion_branch: int = 0
    isotropic_branch: int = 0
    violations: list = field(default_factory=list)
    seconds: float = 0.0
    notes: tuple[str, ...] = (
        "Galois stability is not modelled; only isotropy and nontriviality of l^(k-1) W are checked.",
        "The prime-to-l part r is taken to be 1.",
    )

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_kernel_lemma(M: SympModule, bound: int = DEFAULT_ENUMERATION_BOUND) -> KernelLemmaReport:
    """For every maximal isotropic W with exponent l^k: either W = M[l^{m/2}],
    or l^{k-1} W is a nonzero subgroup of M[l] isotropic for the induced pairing."""
    start = time.perf_counter()
    report = KernelLemmaReport(M.g, M.ell, M.m)
    rows = M.elements()
    for W in enumerate_maximal_isotropic(M, bound):
        report.subgroups += 1
        codes = W.elements()
        w_rows = rows[np.array(sorted(codes), dtype=np.int64)]
        k = next(j for j in range(M.m + 1) if not ((w_rows * M.ell**j) % M.n).any())
        if 2 * k < M.m:
            report.violations.append((W.gens, f"exponent l^{k} below l^(m/2)"))
            continue
        if 2 * k == M.m:
            if codes == M.torsion(k):
                report.full_torsion_branch += 1
            else:
                report.violations.append((W.gens, "exponent l^(m/2) but W != M[l^(m/2)]"))
            continue
        image = np.unique((w_rows * M.ell ** (k - 1)) % M.n, axis=0)
        if not image.any():
            report.violations.append((W.gens, "l^(k-1) W is trivial"))
            continue
        bad = [
            (tuple(a), tuple(b))
            for a in image
            for b in image
            if induced_mod_ell_pairing(M, a, b) != 0
        ]
        if bad:
            report.violations.append((W.gens, f"l^(k-1) W not isotropic: {bad[0]}"))
        else:
            report.isotropic_branch += 1
    report.seconds = time.perf_counter() - start
    return report


def sp_order(g: int, ell: int) -> int:
    """|Sp_{2g}(F_l)| = l^{g^2} prod_{i=1}^g (l^{2i} - 1)."""
    if g < 1:
        raise InvalidInputError("g must be positive")
    return ell ** (g * g) * prod(ell ** (2 * i) - 1 for i in range(1, g + 1))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if not 0 <= k <= n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def isotropic_count(g: int, ell: int, k: int) -> int:
    """Number of isotropic k-dimensional subspaces of F_l^{2g}."""
    if not 1 <= k <= g:
        raise InvalidInputError(f"k = {k} must lie in 1..{g}")
    return gaussian_binomial(g, k, ell) * prod(ell**i + 1 for i in range(g - k + 1, g + 1))


def lagrangian_count(g: int, ell: int) -> int:
    return prod(ell**i + 1 for i in range(1, g + 1))


def block_diag_index(g: int, gB: int, ell: int) -> int:
    """[Sp_{2g} : Sp_{2gB} x Sp_{2gC}] over F_l."""
    if not 1 <= gB < g:
        raise InvalidInputError(f"need 1 <= gB < g, got gB = {gB}, g = {g}")
    num = sp_order(g, ell)
    den = sp_order(gB, ell) * sp_order(g - gB, ell)
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError("block-diagonal index is not an integer")
    return q
