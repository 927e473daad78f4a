"""Acceptance checks; each test records one PASS/FAIL line in the terminal summary."""

import random
from contextlib import contextmanager

import pytest
from hypothesis import given, settings

import hopfcyc.exactlin as el
from hopfcyc.amod import AModObject, algebra_from_hopf, bar_stages, free_amodule, is_A_linear, regular_module
from hopfcyc.cli import load
from hopfcyc.comod import (ColinearMap, direct_sum, grouplike_comodule, hom_colinear, is_colinear, is_injective,
                           regular_comodule, trivial_comodule, untwist_iso)
from hopfcyc.cyclic_cat import Letter, evaluate, make_word, normalize, random_word
from hopfcyc.exactlin import GF, QQ
from hopfcyc.homology import (bicomplex_from_algebra, certify, cyclic_homology, cyclic_homology_bicomplex,
                              hc0_oracle, mixed_from_algebra, mixed_from_cyclic_module)
from hopfcyc.hopf import HOPF_AXIOMS, cofrobenius_data, dual_hopf, group_algebra, integral_space, \
    is_right_integral, validate_hopf
from hopfcyc.hopf_cyclic import (brute_force_coapproximation, build_T, characteristic_map, coapproximation,
                                 cyclic_structure, defect, is_subfamily_closed, span_as_set,
                                 verify_pseudo_para_cyclic)
from hopfcyc.stable import (comparison_to_desuspended_suspension, desuspend, is_stable_equivalence,
                            mapping_cocylinder, mapping_cylinder, stable_hom, suspend)

from conftest import ACCEPTANCE, CORRUPT, HOPF_FILES, bundled_hopf
from strategies import comodules


@contextmanager
def criterion(n, title, detail=""):
    """Record PASS when the block completes, FAIL when it raises."""
    info = {"detail": detail}
    try:
        yield info
    except BaseException:
        ACCEPTANCE[n] = (title, False, info["detail"])
        print(f"criterion {n}: FAIL  {title}")
        raise
    ACCEPTANCE[n] = (title, True, info["detail"])
    print(f"criterion {n}: PASS  {title}")


def _instance(name):
    defs = load(name)
    return defs.get("A", "algebra"), defs.get("M", "stable")


def test_criterion_01_hopf_validation():
    with criterion(1, "bundled Hopf algebras satisfy all axioms; corruptions name the broken axiom"):
        for name in HOPF_FILES:
            rep = validate_hopf(bundled_hopf(name))
            assert rep.ok, (name, rep)
        assert len(HOPF_AXIOMS) == 8
        for name, axiom in CORRUPT.items():
            fails = validate_hopf(bundled_hopf(name)).failures
            assert axiom in fails, (name, fails)


def test_criterion_02_integrals():
    with criterion(2, "integral space is one-dimensional; Λ∘S is a right integral"):
        for name in HOPF_FILES:
            h = bundled_hopf(name)
            assert integral_space(h).nrows() == 1, name
            assert is_right_integral(h, cofrobenius_data(h).right), name


_UNTWIST_RUNS = []


@settings(max_examples=50, deadline=None, database=None)
@given(comodules(max_dim=6))
def _untwist_property(M):
    fwd, bwd = untwist_iso(M)
    n = fwd.source.dim
    I = M.field.identity(n)
    assert M.dim <= 6 and M.hopf.dim <= 4
    assert el.mat_equal(bwd.matrix * fwd.matrix, I) and el.mat_equal(fwd.matrix * bwd.matrix, I)
    assert is_colinear(fwd.matrix, fwd.source, fwd.target)
    assert is_colinear(bwd.matrix, bwd.source, bwd.target)
    _UNTWIST_RUNS.append(M.dim)


def test_criterion_03_untwist():
    with criterion(3, "untwisting isomorphism: round trip and colinearity on 50 random comodules") as c:
        _UNTWIST_RUNS.clear()
        _untwist_property()
        assert len(_UNTWIST_RUNS) >= 50
        c["detail"] = f"{len(_UNTWIST_RUNS)} comodules, 0 failures"


def test_criterion_04_stable_layer():
    detail = "non-semisimple case over H = (F2C2)*, whose comodules are F2C2-modules"
    with criterion(4, "stable layer: equivalences, stable hom, shift and cylinder sequences, A-split witnesses",
                   detail):
        qc2 = group_algebra(2, QQ)
        objs = [trivial_comodule(qc2), grouplike_comodule(qc2, "g"), regular_comodule(qc2)]
        objs.append(direct_sum(objs[0], objs[1]))
        for M in objs:
            for N in objs:
                for f in hom_colinear(M, N) + [QQ.zeros(N.dim, M.dim)]:
                    assert is_stable_equivalence(ColinearMap(M, N, f)).equivalence

        h = dual_hopf(group_algebra(2, GF(2)))
        F = h.field
        k = trivial_comodule(h)
        assert stable_hom(k, k).quotient_dim == 1
        for M in (k, suspend(k).comodule):
            f, _, _ = comparison_to_desuspended_suspension(M)
            assert is_stable_equivalence(f).equivalence
            for data in (suspend(M), desuspend(M)):
                assert data.sequence.exact() and data.sequence.colinear()
        H = regular_comodule(h)
        for f in [ColinearMap(k, k, F.identity(1)), ColinearMap(k, H, F.zeros(2, 1))] + \
                [ColinearMap(k, H, g) for g in hom_colinear(k, H)]:
            cyl, co = mapping_cylinder(f), mapping_cocylinder(f)
            assert cyl.sequence.exact() and cyl.sequence.colinear()
            assert co.sequence.exact() and co.sequence.colinear()
            assert el.mat_equal(cyl.retraction * cyl.incl, F.identity(f.target.dim))
            assert el.mat_equal(co.proj * co.section, F.identity(f.source.dim))

        a = algebra_from_hopf(h)
        X, Y = free_amodule(a, k), regular_module(a)
        f = ColinearMap(X.comodule, Y.comodule, F.identity(h.dim))
        cyl = mapping_cylinder(f, actions=(X.action, Y.action, a.dim))
        C = AModObject("C", a, cyl.cylinder, cyl.action)
        assert is_A_linear(cyl.incl, Y, C) and is_A_linear(cyl.retraction, C, Y)
        co = mapping_cocylinder(f, actions=(X.action, Y.action, a.dim))
        P = AModObject("P", a, co.cocylinder, co.action)
        assert is_A_linear(co.proj, P, X) and is_A_linear(co.section, X, P)


def test_criterion_05_bar_stages():
    with criterion(5, "bar stages C0..C3 over QC2 and F2C2: complex, subquotients, injective"):
        for h in (group_algebra(2, QQ), group_algebra(2, GF(2))):
            a = algebra_from_hopf(h)
            stages = bar_stages(a, 3)
            assert len(stages) == 4
            for s in stages:
                assert s.complex_ok
                # the new top layer of stage n; with dim H = 2 both exponents give dim A^{n+2}
                assert s.subquotient_dims[-1] == a.dim ** (s.n + 2) * (h.dim - 1) ** s.n
                assert s.subquotient_dims == s.expected_dims
                assert is_injective(s.stage.comodule).injective


def test_criterion_06_cyclic_operators():
    detail = "pseudo-para-cyclic identities read as those of Λ₊ (no last-face relations)"
    with criterion(6, "operators of T(A,M) satisfy the simplicial and pseudo-para-cyclic identities", detail):
        Ts = {}
        for name in ("cyclic_bar_qc2", "super_sweedler"):
            A, M = _instance(name)
            Ts[name] = T = build_T(A, M, 3)
            rep = verify_pseudo_para_cyclic(T)
            assert rep.pseudo_para, (name, rep.failed_names())
            assert all(rep.colinear.values())
        T = Ts["super_sweedler"]
        assert all(any(not el.is_zero(m) for _, m in defect(T, "last_face", n)) for n in range(1, 4))
        T = Ts["cyclic_bar_qc2"]
        assert all(el.is_zero(m) for n in range(1, 4) for _, m in defect(T, "last_face", n))


CRITERION_7_ANALYSIS = (
    "t t^-1 = id holds on every stable instance, but on twisted_qc2 (A = QC2, M = k with 1 ↦ g⊗1 and "
    "counit action; stable, antipode bijective and colinear) t[a0|...|an] = [g an|a0|...|a(n-1)], so "
    "t^{n+1} multiplies every factor by g and only t^{2(n+1)} = id; stability alone does not force t^{n+1} = id"
)


@pytest.mark.xfail(strict=True, reason="stable coefficients do not force t^{n+1} = id; see the printed analysis")
def test_criterion_07_cyclicity():
    with criterion(7, "stable M with bijective colinear antipode gives t t^-1 = id and t^{n+1} = id",
                   CRITERION_7_ANALYSIS):
        outcomes = {}
        for name in ("cyclic_bar_qc2", "cyclic_bar_f2c2", "twisted_qc2", "super_sweedler"):
            A, M = _instance(name)
            up = cyclic_structure(build_T(A, M, 3), A, M)
            assert up.stable and up.inverse_ok, name
            outcomes[name] = up.order_ok
        A, M = _instance("sign_qc2")
        up = cyclic_structure(build_T(A, M, 3), A, M)
        assert not up.ok and not up.stable and not up.order_ok
        assert any(f.startswith("t^") and "!= id" in f for f in up.failures)
        print("  t^{n+1} = id per stable instance:", outcomes)
        print("  analysis:", CRITERION_7_ANALYSIS)
        assert all(outcomes.values()), outcomes


def test_criterion_08_coapproximation():
    with criterion(8, "coapproximation equals the brute-force oracle; Q = T when cyclic; idempotent"):
        cases = [(load("mixed_f2c2"), 1), (load("cyclic_bar_f2c2"), 1), (load("twisted_qc2", "2"), 2)]
        for defs, N in cases:
            A, M = defs.get("A", "algebra"), defs.get("M", "stable")
            T = build_T(A, M, N)
            assert all(T.dim(n) <= 12 for n in range(N + 1))
            c = coapproximation(T)
            bf = brute_force_coapproximation(T)
            for n in range(N + 1):
                assert span_as_set(c.inclusions[n], T.field.p) == bf[n]
            assert is_subfamily_closed(T, c.inclusions)
            assert coapproximation(c.Q).dims() == c.dims()
        A, M = _instance("cyclic_bar_qc2")
        T = build_T(A, M, 3)
        assert coapproximation(T).dims() == [T.dim(n) for n in range(4)]


def test_criterion_09_characteristic_map():
    with criterion(9, "characteristic map commutes with every operator, also on coinvariants"):
        for name in ("cyclic_bar_qc2", "cyclic_bar_f2c2"):
            A, _ = _instance(name)
            cm = characteristic_map(A, 2)
            assert cm.commutes_T and cm.commutes_Q and cm.colinear and cm.commutes_coinvariants


def test_criterion_10_homology():
    with criterion(10, "mixed identities; HC(k) = 1,0,1,0,1,0,1; HC0 = dim A/[A,A]; paths agree"):
        k = load("ground_field").get("A", "algebra").algebra
        mc = mixed_from_algebra(k, 7)
        assert certify(mc).ok
        assert cyclic_homology(mc).reliable_dims() == [1, 0, 1, 0, 1, 0, 1]
        for name in ("cyclic_bar_qc2", "super_sweedler"):
            A, M = _instance(name)
            a = A.algebra
            mc = mixed_from_algebra(a, 3)
            assert certify(mc).ok
            assert bicomplex_from_algebra(a, 3).squares_anticommute()
            hc = cyclic_homology(mc)
            assert hc.dims[0] == hc0_oracle(a)
            assert cyclic_homology_bicomplex(a, 3).reliable_dims() == hc.reliable_dims()
        A, M = _instance("cyclic_bar_qc2")
        up = cyclic_structure(build_T(A, M, 3), A, M)
        assert certify(mixed_from_cyclic_module(up.upgraded)).ok


def test_criterion_11_cyclic_category():
    with criterion(11, "200 random words: evaluation agrees with the normal form; t-powers reduce mod n+1"):
        A, M = _instance("cyclic_bar_qc2")
        up = cyclic_structure(build_T(A, M, 6, bound=6), A, M)
        assert up.ok
        X = up.upgraded
        rng = random.Random(20240517)
        failures = 0
        for _ in range(200):
            w = random_word(rng, 20, 6, "lambda")
            assert len(w.letters) <= 20 and max(w.source, w.target) <= 6
            failures += not el.mat_equal(evaluate(w, X), evaluate(normalize(w), X))
        assert failures == 0
        for n in range(7):
            for p in range(-2 * (n + 1), 2 * (n + 2)):
                assert normalize(make_word([Letter("t", p, n)], "lambda", n)).power == p % (n + 1)


def test_criterion_12_determinism():
    import test_cli
    with criterion(12, "every CLI golden reproduces byte-identically across two runs"):
        for stem, cmd, want in test_cli.goldens.CASES:
            first, second = test_cli.goldens.capture(cmd), test_cli.goldens.capture(cmd)
            assert first == second
            assert first[0] == want
            assert first[1] == (test_cli.GOLDEN / f"{stem}.txt").read_text()
