"""Exact linear algebra: echelon forms, kernels, solves and tensor bookkeeping."""

import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

import hopfcyc.exactlin as el
from hopfcyc.exactlin import GF, QQ


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def rational_matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return rows


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rank_and_rref_match_sympy(rows):
    m = QQ.from_rows(rows)
    ref = sympy.Matrix(rows)
    assert el.rank(m) == ref.rank()
    R, piv = el.rref(m)
    Rs, pivs = ref.rref()
    assert list(piv) == list(pivs)
    assert [[sympy.Rational(str(x)) for x in row] for row in R.tolist()[:len(piv)]] == \
        Rs.tolist()[:len(pivs)]


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_nullspace_is_kernel_of_right_dimension(rows):
    m = QQ.from_rows(rows)
    K = el.nullspace(m)
    assert K.ncols() == m.ncols() - el.rank(m)
    assert el.is_zero(m * K) if K.ncols() else True
    assert el.rank(K) == K.ncols()


@settings(max_examples=60, deadline=None)
@given(rational_matrices(), st.lists(small_ints, min_size=5, max_size=5))
def test_solve_affine_on_consistent_systems(rows, coeffs):
    a = QQ.from_rows(rows)
    x0 = QQ.vector(coeffs[:a.ncols()])
    b = a * x0
    x = el.solve_affine(a, b)
    assert x is not None and el.mat_equal(a * x, b)


def test_solve_affine_detects_inconsistency():
    a = QQ.from_rows([[1, 1], [2, 2]])
    assert el.solve_affine(a, QQ.vector([1, 3])) is None


def test_nullspace_canonical_basis():
    K = el.nullspace(QQ.from_rows([[1, 1, 0]]))
    assert K.tolist() == [[-1, 0], [1, 0], [0, 1]]


def test_prime_field_arithmetic():
    F = GF(3)
    m = F.from_rows([[1, 2], [2, 1]])
    assert el.rank(m) == 1
    assert F.parse("5") == F(2)
    assert F.characteristic == 3 and not F.is_rational


@settings(max_examples=40, deadline=None)
@given(rational_matrices(3, 3), rational_matrices(3, 3))
def test_intersection_lies_in_both(r1, r2):
    n = max(len(r1), len(r2))
    pad = lambda rs: rs + [[0] * len(rs[0])] * (n - len(rs))  # noqa: E731
    a, b = QQ.from_rows(pad(r1)), QQ.from_rows(pad(r2))
    I = el.intersect_subspaces(a, b)
    if I.ncols():
        assert el.in_column_space(el.column_space(a), I)
        assert el.in_column_space(el.column_space(b), I)
    dim_sum = el.rank(el.hstack(QQ, [a, b]))
    assert I.ncols() == el.rank(a) + el.rank(b) - dim_sum


def test_kron_index_convention():
    a = QQ.from_rows([[1, 2], [3, 4]])
    b = QQ.from_rows([[0, 1], [1, 0]])
    k = el.kron(a, b)
    for (i, j, p, q) in itertools.product(range(2), repeat=4):
        assert k[i * 2 + p, j * 2 + q] == a[i, j] * b[p, q]


@pytest.mark.parametrize("dims,order", [([2, 3], [1, 0]), ([2, 3, 2], [2, 0, 1]), ([3, 1, 2], [0, 2, 1])])
def test_permute_factors_moves_basis_tensors(dims, order):
    P = el.permute_factors(QQ, dims, order)
    idx = list(itertools.product(*[range(d) for d in dims]))
    out_dims = [dims[k] for k in order]

    def flat(t, ds):
        v = 0
        for x, d in zip(t, ds):
            v = v * d + x
        return v

    for t in idx:
        col = el.submatrix(P, None, [flat(t, dims)])
        expect = flat([t[k] for k in order], out_dims)
        assert el.nonzero_entries(col) == {(expect, 0): 1}


def test_vec_unvec_round_trip():
    m = QQ.from_rows([[1, 2, 3], [4, 5, 6]])
    assert el.mat_equal(el.unvec(el.vec(m), 2, 3), m)


def test_quotient_and_section():
    incl = el.LinMap(el.VectorSpace(1), el.VectorSpace(3), QQ.from_rows([[1], [1], [0]]), QQ)
    q = el.quotient_and_section(incl)
    P, S = q.projection.matrix, q.section.matrix
    assert q.quotient.dim == 2
    assert el.mat_equal(P * S, QQ.identity(2))
    assert el.is_zero(P * incl.matrix)
