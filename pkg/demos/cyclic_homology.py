"""
Cyclic homology three ways
==========================

The mixed complex (b, B), the (b, B)-bicomplex and, in characteristic 0,
Connes' quotient complex C/(1 - λ).
"""

from hopfcyc.amod import algebra_from_hopf, ground_algebra
from hopfcyc.exactlin import GF, QQ
from hopfcyc.homology import (connes_complex_homology, cyclic_homology, cyclic_homology_bicomplex, hc0_oracle,
                              hochschild_homology, mixed_from_algebra)
from hopfcyc.hopf import group_algebra, sweedler

algebras = {
    "k": ground_algebra(group_algebra(2, QQ)),
    "QC2": algebra_from_hopf(group_algebra(2, QQ)),
    "F2C2": algebra_from_hopf(group_algebra(2, GF(2))),
    "Sweedler": algebra_from_hopf(sweedler(QQ)),
}
N = 4

for name, a in algebras.items():
    mc = mixed_from_algebra(a, N)
    hc = cyclic_homology(mc).reliable_dims()
    hh = hochschild_homology(mc).reliable_dims()
    bic = cyclic_homology_bicomplex(a, N).reliable_dims()
    connes = connes_complex_homology(a, N).reliable_dims() if a.field.is_rational else "n/a"
    print(f"{name:9s} HH {hh}  HC {hc}  bicomplex {bic}  Connes {connes}  dim A/[A,A] = {hc0_oracle(a)}")
