"""Hopf algebra axioms, duals, integrals and the bundled data files."""

import pytest

import hopfcyc.exactlin as el
from hopfcyc.exactlin import GF, QQ
from hopfcyc.fileformat import serialize_definitions
from hopfcyc.hopf import (HOPF_AXIOMS, cofrobenius_data, dual_hopf, group_algebra, integral_space,
                          is_cocommutative, is_commutative, is_cosemisimple, is_left_integral,
                          is_right_integral, sweedler, validate_hopf)

from conftest import CORRUPT, HOPF_FILES, bundled_hopf, load_bundled


@pytest.mark.parametrize("name", HOPF_FILES)
def test_bundled_hopf_algebras_satisfy_all_axioms(name):
    rep = validate_hopf(bundled_hopf(name))
    assert rep.ok, rep.failures


@pytest.mark.parametrize("name,axiom", sorted(CORRUPT.items()))
def test_corruptions_name_their_axiom(name, axiom):
    rep = validate_hopf(bundled_hopf(name))
    assert not rep.ok
    assert axiom in rep.failures
    assert set(rep.failures) <= set(HOPF_AXIOMS)


def test_corruption_failure_sets_are_minimal_where_possible():
    assert validate_hopf(bundled_hopf("broken_assoc")).failures == ["associativity"]
    assert validate_hopf(bundled_hopf("broken_antipode")).failures == ["antipode_left", "antipode_right"]


def test_shape_errors_suppress_axiom_checks():
    h = group_algebra(2, QQ)
    bad = type(h)(h.name, h.field, h.space, h.mult, h.unit, h.comult, QQ.zeros(1, 3), h.antipode)
    rep = validate_hopf(bad)
    assert rep.shape_errors and not rep.failures and not rep.ok


@pytest.mark.parametrize("name", HOPF_FILES)
def test_integral_space_is_one_dimensional(name):
    h = bundled_hopf(name)
    assert integral_space(h).nrows() == 1
    integ = cofrobenius_data(h)
    assert is_left_integral(h, integ.left)
    assert is_right_integral(h, integ.right)
    assert integ.is_cofrobenius and integ.right_value(integ.x) != 0


def test_group_algebra_integral_is_delta_at_identity():
    integ = cofrobenius_data(group_algebra(3, QQ))
    assert integ.left.tolist() == [[1, 0, 0]]
    assert integ.right.tolist() == [[1, 0, 0]]


def test_sweedler_integrals():
    # left integral δ_gx; composing with S(x) = -gx, S(gx) = x gives Λ' = -δ_x
    h = sweedler(QQ)
    integ = cofrobenius_data(h)
    assert integ.left.tolist() == [[0, 0, 0, 1]]
    assert integ.right.tolist() == [[0, 0, -1, 0]]
    assert h.labels[integ.x_index] == "x"
    assert not is_cosemisimple(h, integ)
    # the left integral is not a right integral
    assert not is_right_integral(h, integ.left)


def test_cosemisimplicity_follows_maschke():
    assert is_cosemisimple(group_algebra(2, QQ))
    assert is_cosemisimple(group_algebra(2, GF(2)))   # graded spaces: semisimple in every characteristic
    assert not is_cosemisimple(dual_hopf(group_algebra(2, GF(2))))


@pytest.mark.parametrize("F", [QQ, GF(3)])
def test_dual_of_dual_is_original(F):
    h = group_algebra(3, F)
    dd = dual_hopf(dual_hopf(h))
    for t in ("mult", "unit", "comult", "counit", "antipode"):
        assert el.mat_equal(getattr(dd, t), getattr(h, t))
    assert validate_hopf(dual_hopf(h)).ok


def test_commutativity_flags():
    s = sweedler(QQ)
    assert not is_commutative(s) and not is_cocommutative(s)
    g = group_algebra(3, QQ)
    assert is_commutative(g) and is_cocommutative(g)


def test_sweedler_rejects_characteristic_two():
    with pytest.raises(ValueError):
        sweedler(GF(2))


def test_bundled_files_match_the_constructors(generator_module, all_bundled):
    files = generator_module.build_files()
    assert sorted(files) == sorted(all_bundled)
    for name, defs in files.items():
        text = (generator_module.OUT / f"{name}.alg").read_text()
        assert serialize_definitions(defs) == text, name


def test_bundled_kc2_equals_group_algebra():
    h = bundled_hopf("kc2")
    ref = group_algebra(2, QQ)
    for t in ("mult", "unit", "comult", "counit", "antipode"):
        assert el.mat_equal(getattr(h, t), getattr(ref, t))
    assert set(load_bundled("kc2").names()) == {"QC2", "k", "H", "A", "HH"}
