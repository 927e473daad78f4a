"""
The operators of T(A, M) and when they are cyclic
=================================================

T_n(A, M) = A^{⊗(n+1)}⊗M with faces, degeneracies and the twisted
rotation t.  A nontrivial A-coaction on M breaks the identities that
involve the last face, and a stable M can still give t^{n+1} ≠ id.
"""

from hopfcyc.exactlin import GF
from hopfcyc.hopf_cyclic import (build_T, coapproximation, cyclic_bar_fixture, cyclic_structure,
                                 mixed_grouplike_fixture, super_sweedler_fixture, twisted_group_fixture,
                                 verify_pseudo_para_cyclic)

fixtures = {
    "cyclic bar QC2": cyclic_bar_fixture(),
    "super Sweedler, M = k_g": super_sweedler_fixture(),
    "QC2, M = k_g": twisted_group_fixture(),
}

for name, (B, M) in fixtures.items():
    T = build_T(B, M, 2)
    rep = verify_pseudo_para_cyclic(T)
    print(f"{name}: dims {[T.dim(n) for n in range(3)]}")
    print("   pseudo-para-cyclic", rep.pseudo_para, " para-cyclic", rep.para, " cyclic", rep.cyclic)
    print("   relation families (held, failed):", rep.relations.summary())
    up = cyclic_structure(T, B, M)
    print("   stable", up.stable, " t t^-1 = id", up.inverse_ok, " t^{n+1} = id", up.order_ok)

# the cyclic part of a mixed example: k ⊕ k_g over F_2
B, M = mixed_grouplike_fixture(GF(2))
T = build_T(B, M, 2)
c = coapproximation(T)
print("mixed F2: T dims", [T.dim(n) for n in range(3)], " Q dims", c.dims(),
      "(top degree provisional)" if c.provisional_top else "")
