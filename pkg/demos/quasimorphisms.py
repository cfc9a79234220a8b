"""
Quasi-morphisms from linking
============================

Cos_A(B) = lk(A, B) - lk(A, tB) is a homogeneous quasi-morphism in B.
So are the pattern asymmetries mas_P = occ_P - occ_tP, and Cos_R is the
Rademacher function. On the set L_m of positive primitive classes of
length <= m both families give square integer matrices.
"""

from modknot import FunctionalVec, basis_matrices, decompose, defect, mas, recombine
from modknot.qmbasis import basis_index, det_exact

for name in ("rad", "mas:RRL", "cos:RLL"):
    rep = defect(name, samples=300, seed=3)
    print(f"{name:>8}: sampled defect {rep.max_defect}")

for m in range(1, 7):
    m_mas, m_cos = basis_matrices(m)
    print(f"m={m} |L_m|={len(basis_index(m))} det M_mas={det_exact(m_mas)} det M_cos={det_exact(m_cos)}")

# the Cos basis is singular from m = 5 on; two of its rows coincide
idx = [a.canonical for a in basis_index(5)]
_, m_cos = basis_matrices(5)
print("Cos_RRL   on L_5:", m_cos[idx.index("RRL")])
print("Cos_RRRLL on L_5:", m_cos[idx.index("RRRLL")])

# Rad in the Cos basis of L_4 is the coordinate vector of R
rad = FunctionalVec.of(lambda a: a.rad, 4)
print(decompose(rad, "cos").values)

# mas_RRL in both bases of L_4, with an exact round trip
f = FunctionalVec.of(lambda a: mas("RRL", a), 4)
for basis in ("mas", "cos"):
    c = decompose(f, basis)
    assert recombine(c, basis) == f
    print(basis, {k: str(v) for k, v in c.values.items()})
