"""Exact computations with Hopf algebras, comodules, stable categories and Hopf-cyclic objects."""

from .exactlin import GF, QQ, Field
from .hopf import (HopfAlgebra, cofrobenius_data, dual_hopf, group_algebra, integral_space, sweedler,
                   trivial_hopf, validate_hopf)
from .comod import Comodule, ColinearMap, is_colinear, is_injective, regular_comodule, trivial_comodule
from .stable import is_stable_equivalence, mapping_cocylinder, mapping_cylinder, stable_hom, suspend, desuspend
from .amod import AModObject, ComoduleAlgebra, algebra_from_hopf, bar_stages, total_integral
from .cyclic_cat import evaluate, normalize, parse_word
from .hopf_cyclic import (HopfBialgebraInComod, ParaCyclicComodule, StableModComod, build_T,
                          characteristic_map, coapproximation, cyclic_structure, verify_pseudo_para_cyclic)
from .homology import cyclic_homology, cyclic_homology_bicomplex, mixed_from_algebra, mixed_from_cyclic_module

__version__ = "0.1.0"
