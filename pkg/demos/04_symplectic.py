"""
Isotropic subgroups of (Z/l^m)^(2g)
===================================

Enumerate maximal isotropic subgroups, compare with the counting formulas,
and run the structural check on kernels of isogenies of degree l^(mg).
"""
import time

from nonsimple.symplectic import (
    SympModule,
    enumerate_maximal_isotropic,
    isotropic_count,
    lagrangian_count,
    sp_order,
    verify_kernel_lemma,
    verify_scaling_identity,
)

print([sp_order(g, ell) for g, ell in [(1, 2), (1, 3), (2, 2), (2, 3)]])

for g, ell in [(1, 2), (2, 2), (2, 3), (3, 2)]:
    t = time.perf_counter()
    found = enumerate_maximal_isotropic(SympModule(g, ell), bound=10**5)
    print(f"g={g} l={ell}: {len(found)} Lagrangians, formula {lagrangian_count(g, ell)}, {time.perf_counter() - t:.2f} s")

print("isotropic lines in F_3^4:", isotropic_count(2, 3, 1))

M = SympModule(1, 3, 2)
for W in enumerate_maximal_isotropic(M):
    print(W.pivots, W.gens)

for gem in [(1, 2, 2), (1, 2, 3), (2, 2, 2)]:
    rep = verify_kernel_lemma(SympModule(*gem))
    print(gem, rep.subgroups, rep.full_torsion_branch, rep.isotropic_branch, len(rep.violations))

print(verify_scaling_identity(SympModule(2, 2, 3), 4, 2))
