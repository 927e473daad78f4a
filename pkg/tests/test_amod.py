"""Comodule algebras, A-module objects, bar stages, total integrals and Hopf modules."""

import pytest

import hopfcyc.exactlin as el
from hopfcyc.amod import (AModObject, ComoduleAlgebra, algebra_from_hopf, bar_differential, bar_stages,
                          coinvariants_and_fundamental, free_amodule, ground_algebra, hom_A, hom_A_colinear,
                          homA_with_action, hopf_module_failures, induced_hopf_module, regular_hopf_module,
                          regular_module, stage_is_injective, total_integral, trivial_module,
                          validate_algebra, validate_algebra_and_module, validate_module)
from hopfcyc.comod import is_colinear, regular_comodule, same_span, trivial_comodule
from hopfcyc.exactlin import GF, QQ
from hopfcyc.hopf import dual_hopf, group_algebra, sweedler
from hopfcyc.hopf_cyclic import graded_comodule

QC2, F2C2, SW = group_algebra(2, QQ), group_algebra(2, GF(2)), sweedler(QQ)
F2C2_DUAL = dual_hopf(F2C2)


@pytest.mark.parametrize("h", [QC2, F2C2, SW, F2C2_DUAL], ids=lambda h: h.name)
def test_regular_and_ground_algebras_validate(h):
    a = algebra_from_hopf(h)
    assert validate_algebra(a).ok
    assert validate_algebra(ground_algebra(h)).ok
    assert validate_module(regular_module(a)).ok
    assert validate_module(free_amodule(a, trivial_comodule(h, 2))).ok
    k = ground_algebra(h)
    assert validate_module(trivial_module(k, trivial_comodule(h), h.field.identity(1))).ok
    # the counit is not colinear for the regular coaction unless H = k
    assert not validate_module(trivial_module(a, trivial_comodule(h), h.counit)).ok


def test_grading_compatibility_is_checked():
    # Sweedler's algebra graded over QC2 by the power of g is an algebra in comodules;
    # putting the unit in odd degree breaks both colinearity conditions
    good = ComoduleAlgebra("A", graded_comodule(QC2, ["e", "g", "e", "g"], "A"), SW.mult, SW.unit)
    assert validate_algebra(good).ok
    bad = ComoduleAlgebra("A", graded_comodule(QC2, ["g", "e", "e", "e"], "A"), SW.mult, SW.unit)
    fails = validate_algebra(bad).failures
    assert "algebra A: multiplication not colinear" in fails and "algebra A: unit not colinear" in fails


def test_module_failures_are_named():
    a = algebra_from_hopf(QC2)
    m = AModObject("bad", a, regular_comodule(QC2), QQ.zeros(2, 4))
    rep = validate_algebra_and_module(a, m)
    assert "module bad: unitality" in rep.failures


def test_hom_A_of_free_modules():
    a = algebra_from_hopf(SW)
    A = regular_module(a)
    # End_A(A) = A^op (right multiplications), 4-dimensional; colinear ones are k·id
    assert len(hom_A(A, A)) == 4
    assert len(hom_A_colinear(A, A)) == 1


@pytest.mark.parametrize("h,stable", [(QC2, True), (SW, False)], ids=["QC2", "sweedler"])
def test_hstar_action_on_hom_A(h, stable):
    a = algebra_from_hopf(h)
    A = regular_module(a)
    A2 = free_amodule(a, trivial_comodule(h, 2))
    for M, N in ((A, A), (A, A2), (A2, A)):
        act = homA_with_action(M, N)
        # Hom_A is H*-stable over the group algebra but not over Sweedler's algebra
        assert act.stable == stable
        # invariants inside Hom_A are exactly the colinear A-linear maps
        col = hom_A_colinear(M, N)
        assert same_span(h.field, act.invariants, col, N.dim, M.dim)


@pytest.mark.parametrize("h", [QC2, F2C2], ids=lambda h: h.name)
def test_bar_stages_over_two_dimensional_group_algebras(h):
    a = algebra_from_hopf(h)
    stages = bar_stages(a, 3)
    assert [s.stage.dim for s in stages] == [6, 14, 30, 62]
    for s in stages:
        assert s.complex_ok and s.split_ok
        assert s.subquotient_dims == s.expected_dims
        assert s.subquotient_dims[-1] == a.dim ** (s.n + 2) * (h.dim - 1) ** (s.n + 1)
        assert stage_is_injective(s)
        assert validate_module(s.stage).ok


def test_bar_stages_over_the_nonsemisimple_dual():
    a = algebra_from_hopf(F2C2_DUAL)
    for s in bar_stages(a, 2):
        assert s.complex_ok and s.split_ok and s.subquotient_dims == s.expected_dims
        assert stage_is_injective(s)


def test_bar_differential_squares_to_zero():
    a = algebra_from_hopf(SW)
    for n in range(3):
        assert el.is_zero(bar_differential(a, n) * bar_differential(a, n + 1))


def test_bar_truncation_is_enforced():
    with pytest.raises(ValueError):
        bar_stages(algebra_from_hopf(QC2), 4)


@pytest.mark.parametrize("h", [QC2, F2C2, SW], ids=lambda h: h.name)
def test_total_integral_exists_for_regular_algebra(h):
    a = algebra_from_hopf(h)
    phi = total_integral(a)
    assert phi is not None
    assert el.mat_equal(phi * h.unit, a.unit)
    assert is_colinear(phi, regular_comodule(h), a.comodule)


def test_no_total_integral_into_the_ground_field():
    # a colinear unital map H -> k would split the counit colinearly, forcing k injective
    assert total_integral(ground_algebra(SW)) is None
    assert total_integral(ground_algebra(QC2)) is not None


@pytest.mark.parametrize("h", [QC2, SW, F2C2_DUAL], ids=lambda h: h.name)
def test_fundamental_theorem_of_hopf_modules(h):
    for M, coinv in ((regular_hopf_module(h), 1), (induced_hopf_module(h, 2), 2)):
        assert hopf_module_failures(M) == []
        fd = coinvariants_and_fundamental(M)
        assert fd.coinvariants.ncols() == coinv
        assert fd.isomorphism


def test_broken_hopf_module_is_detected():
    M = regular_hopf_module(SW)
    bad = type(M)("bad", SW, M.space, M.action, el.kron(SW.unit, SW.identity()))
    fails = hopf_module_failures(bad)
    assert "compatibility" in fails
    assert not coinvariants_and_fundamental(bad).isomorphism
