"""
Integrals and the stable comodule category
==========================================

Sweedler's four-dimensional Hopf algebra is not cosemisimple, so its
trivial comodule is not injective and survives in the stable category.
"""

from hopfcyc.exactlin import GF, QQ
from hopfcyc.hopf import cofrobenius_data, dual_hopf, group_algebra, is_cosemisimple, sweedler
from hopfcyc.comod import is_injective, trivial_comodule
from hopfcyc.stable import comparison_to_desuspended_suspension, is_stable_equivalence, stable_hom, suspend

# the integral, its composite with the antipode, and the chosen x
h = sweedler(QQ)
data = cofrobenius_data(h)
print("left integral  ", data.left)
print("right integral ", data.right)
print("x =", h.labels[data.x_index], " cosemisimple:", is_cosemisimple(h, data))

# k is injective over QC2 (semisimple) but not over Sweedler's algebra
for H in (group_algebra(2, QQ), h):
    print(H.name, "k injective:", is_injective(trivial_comodule(H)).injective)

# comodules over (F2C2)* are F2C2-modules: stable End(k) is one-dimensional
H = dual_hopf(group_algebra(2, GF(2)))
k = trivial_comodule(H)
s = stable_hom(k, k)
print("(F2C2)*: hom", len(s.ambient), " stably trivial", len(s.trivial), " stable", s.quotient_dim)

# the suspension has dimension dim M (dim H - 1) and k -> Σ⁻¹Σk is a stable equivalence
Sk = suspend(k).comodule
print("dim Σk =", Sk.dim)
for M in (k, Sk):
    f, _, des = comparison_to_desuspended_suspension(M)
    print(f"dim M = {M.dim} -> dim Σ⁻¹ΣM = {des.comodule.dim}:",
          "stable equivalence" if is_stable_equivalence(f).equivalence else "not an equivalence")
