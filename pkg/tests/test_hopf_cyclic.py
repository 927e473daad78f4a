"""The pseudo-paracyclic comodule T(A, M), its cyclic upgrade and its coapproximation."""

import pytest

import hopfcyc.exactlin as el
from hopfcyc.comod import regular_comodule, trivial_comodule
from hopfcyc.exactlin import GF, QQ, kron
from hopfcyc.hopf import dual_hopf, group_algebra
from hopfcyc.hopf_cyclic import (HopfBialgebraInComod, StableModComod, brute_force_coapproximation, build_T,
                                 characteristic_map, coapproximation, cyclic_bar_fixture, cyclic_structure,
                                 defect, hopf_module_vanishing_check, inverse_cyclic_operators,
                                 is_subfamily_closed, mixed_grouplike_fixture, sign_character_fixture,
                                 span_as_set, super_sweedler_fixture, trivial_coefficients, trivially_coacting,
                                 twisted_group_fixture, validate_bialgebra, validate_coefficients,
                                 verify_pseudo_para_cyclic)

F2 = GF(2)

FIXTURES = {
    "bar_qc2": cyclic_bar_fixture,
    "bar_f2c2": lambda: cyclic_bar_fixture(F2),
    "super_sweedler": super_sweedler_fixture,
    "twisted": twisted_group_fixture,
    "sign": sign_character_fixture,
    "mixed": mixed_grouplike_fixture,
}


def _cyclic_index(idx, n, p):
    """Group elements (exponents mod p) of a basis index of (kC_p)^{⊗(n+1)}⊗kC_p."""
    digits = []
    for _ in range(n + 2):
        digits.append(idx % p)
        idx //= p
    return digits[::-1]


def _index(digits, p):
    out = 0
    for d in digits:
        out = out * p + d
    return out


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_validate(name):
    B, M = FIXTURES[name]()
    assert validate_bialgebra(B).ok
    fails = validate_coefficients(M, B).failures
    # the sign character is deliberately unstable
    assert fails == (["coefficients k_sign: not stable (action∘coaction != id)"] if name == "sign" else [])


@pytest.mark.parametrize("name", FIXTURES)
def test_dimensions_and_colinearity(name):
    B, M = FIXTURES[name]()
    T = build_T(B, M, 3)
    assert [T.dim(n) for n in range(4)] == [B.dim ** (n + 1) * M.dim for n in range(4)]
    assert all(verify_pseudo_para_cyclic(T).colinear.values())


def test_last_face_on_the_cyclic_bar_construction():
    # A = M = QC2, n = 1: d_1([a0|a1] m) = [a1 a0] m, a map of dimension 8 -> 4
    B, M = cyclic_bar_fixture()
    T = build_T(B, M, 1)
    d1 = T.face(1, 1)
    assert el.shape(d1) == (4, 8)
    want = QQ.zeros(4, 8)
    for j in range(8):
        a0, a1, m = _cyclic_index(j, 1, 2)
        want[_index([(a1 + a0) % 2, m], 2), j] = 1
    assert el.mat_equal(d1, want)


@pytest.fixture(scope="module")
def bar_qc3():
    B, M = cyclic_bar_fixture(n=3)
    return build_T(B, M, 2)


@pytest.mark.parametrize("n", range(3))
def test_trivial_coaction_gives_the_classical_cyclic_operator(bar_qc3, n):
    # with m ↦ 1⊗m the operator only rotates the algebra factors
    p = 3
    T = bar_qc3
    dim = T.dim(n)
    want = QQ.zeros(dim, dim)
    for j in range(dim):
        *a, m = _cyclic_index(j, n, p)
        want[_index([a[-1]] + a[:-1] + [m], p), j] = 1
    assert el.mat_equal(T.cyclic(n), want)


def test_nontrivial_coaction_breaks_last_face_identities():
    B, M = super_sweedler_fixture()
    T = build_T(B, M, 3)
    rep = verify_pseudo_para_cyclic(T)
    assert rep.pseudo_para and not rep.para
    failed = {r.family for r in rep.relations.failed}
    assert {"last_face", "dt_last"} <= failed
    assert "st" not in failed and "lambda_plus" not in failed
    for n in range(1, 4):
        assert any(not el.is_zero(m) for _, m in defect(T, "last_face", n))
    Bt, Mt = cyclic_bar_fixture()
    Tt = build_T(Bt, Mt, 3)
    for n in range(1, 4):
        assert all(el.is_zero(m) for _, m in defect(Tt, "last_face", n))


def _sweedler_regular_coefficients():
    """Sweedler's algebra acting by the counit and coacting on itself by Δ (stable)."""
    B, _ = super_sweedler_fixture()
    a = B.algebra
    M = StableModComod("A_Delta", a, a.comodule, kron(B.counit, B.field.identity(4)), B.comult)
    return B, M


def test_inverse_uses_the_inverse_antipode():
    B, M = _sweedler_regular_coefficients()
    assert validate_coefficients(M, B).ok
    T = build_T(B, M, 1)
    up = cyclic_structure(T, B, M)
    assert up.stable and up.inverse_ok
    # S² ≠ id here, so substituting S for S⁻¹ no longer inverts t
    wrong = HopfBialgebraInComod(B.algebra, B.comult, B.counit, el.inverse(B.antipode))
    tw = inverse_cyclic_operators(wrong, M, 1)
    for n in range(2):
        assert not el.mat_equal(T.cyclic(n) * tw[n], B.field.identity(T.dim(n)))


@pytest.mark.parametrize("F", [QQ, F2], ids=["QQ", "F2"])
def test_cyclic_bar_upgrades(F):
    B, M = cyclic_bar_fixture(F)
    up = cyclic_structure(build_T(B, M, 3), B, M)
    assert up.ok and up.stable and up.inverse_ok and up.order_ok
    assert verify_pseudo_para_cyclic(up.upgraded).cyclic


def test_stable_coefficients_need_not_give_finite_order():
    B, M = twisted_group_fixture()
    up = cyclic_structure(build_T(B, M, 3), B, M)
    assert up.stable and up.inverse_ok and not up.order_ok and not up.ok
    assert "t^2 != id in degree 1" in up.failures


def test_unstable_coefficients_are_refused():
    B, M = sign_character_fixture()
    up = cyclic_structure(build_T(B, M, 3), B, M)
    assert not up.ok and not up.stable
    assert up.failures[0].startswith("coefficients not stable")
    assert any(f.startswith("t^") for f in up.failures)


@pytest.mark.parametrize("make,N,dims", [(mixed_grouplike_fixture, 1, [2, 6]), (twisted_group_fixture, 2, [0, 0, 1]),
                                         (cyclic_bar_fixture, 1, [4, 8])], ids=["mixed", "twisted", "bar"])
def test_coapproximation_matches_brute_force(make, N, dims):
    B, M = make(F2)
    T = build_T(B, M, N)
    c = coapproximation(T)
    assert c.dims() == dims
    bf = brute_force_coapproximation(T)
    for n in range(N + 1):
        assert span_as_set(c.inclusions[n], 2) == bf[n]


def test_coapproximation_is_idempotent_and_closed():
    B, M = mixed_grouplike_fixture()
    T = build_T(B, M, 2)
    c = coapproximation(T)
    assert is_subfamily_closed(T, c.inclusions)
    assert verify_pseudo_para_cyclic(c.Q).cyclic
    again = coapproximation(c.Q)
    assert again.dims() == c.dims()
    # 1⊗u0 lies in Q_0: the untwisted summand is the cyclic bar part
    assert el.in_column_space(c.inclusions[0], QQ.vector([1, 0, 0, 0]))


def test_coapproximation_of_a_cyclic_object_is_everything():
    B, M = cyclic_bar_fixture()
    T = build_T(B, M, 2)
    c = coapproximation(T)
    assert c.dims() == [T.dim(n) for n in range(3)]


def test_characteristic_map_commutes():
    B, _ = cyclic_bar_fixture()
    cm = characteristic_map(B, 2)
    assert cm.commutes_T and cm.commutes_Q and cm.colinear and cm.commutes_coinvariants
    assert cm.source.dims() == [2, 4, 8] and cm.target.dims() == [4, 8, 16]


def test_hopf_module_coefficients_give_injective_terms():
    # H = (F_2C_2)*, coefficients M = H with its regular H-action; A = F_2C_2 acts by the counit
    H = dual_hopf(group_algebra(2, F2))
    B = trivially_coacting(group_algebra(2, F2), H)
    a = B.algebra
    R = regular_comodule(H)
    M = StableModComod("H", a, R, kron(B.counit, F2.identity(2)), kron(a.unit, F2.identity(2)))
    assert validate_coefficients(M, B).ok
    T = build_T(B, M, 1)
    v = hopf_module_vanishing_check(T, R, H.mult)
    assert v.applicable and v.vanishes


def test_vanishing_check_reports_inapplicable_input():
    H = dual_hopf(group_algebra(2, F2))
    B = trivially_coacting(group_algebra(2, F2), H)
    T = build_T(B, trivial_coefficients(B.algebra, B.counit), 1)
    v = hopf_module_vanishing_check(T, trivial_comodule(H), F2.zeros(1, 2))
    assert not v.applicable and not v.vanishes and "unitality" in v.reason


def test_broken_coefficients_are_reported():
    B, M = cyclic_bar_fixture()
    bad = StableModComod("bad", M.algebra, M.comodule, M.action * 2, M.acoaction)
    assert not validate_coefficients(bad, B).ok


def test_degree_bound_is_enforced():
    B, M = cyclic_bar_fixture()
    with pytest.raises(ValueError):
        build_T(B, M, 5)
