"""
Exact linear algebra over Q and F_p.

Matrices are python-flint ``fmpq_mat`` (rationals, arbitrary precision) or
``nmod_mat`` (prime fields).  Column convention throughout: column ``j`` of the
matrix of a linear map is the image of basis vector ``j``.

Every "choose a basis / splitting / particular solution" step goes through the
reduced row-echelon form, so all choices are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import flint


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The base field: ``Field()`` is Q, ``Field(p)`` is F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "rational" if self.p is None else f"prime {self.p}"

    # -- scalars ---------------------------------------------------------
    def __call__(self, value):
        """Coerce an int, Fraction, str or flint scalar into the field."""
        if self.p is None:
            if isinstance(value, flint.fmpq):
                return value
            if isinstance(value, str):
                return flint.fmpq(Fraction(value).numerator, Fraction(value).denominator)
            if isinstance(value, flint.nmod):
                raise TypeError("cannot coerce a residue into Q")
            q = Fraction(value)
            return flint.fmpq(q.numerator, q.denominator)
        if isinstance(value, flint.nmod):
            return flint.nmod(int(value), self.p)
        if isinstance(value, flint.fmpq):
            value = Fraction(int(value.p), int(value.q))
        if isinstance(value, str):
            value = Fraction(value)
        q = Fraction(value)
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"{value} has no residue mod {self.p}")
        return flint.nmod(q.numerator, self.p) / flint.nmod(q.denominator, self.p)

    def parse(self, text: str):
        return self(text.strip())

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def _raw(self, value):
        # entry form accepted by the flint matrix constructors
        if self.p is None:
            return self(value)
        return int(self(value))

    # -- matrices --------------------------------------------------------
    def matrix(self, rows: int, cols: int, entries: Sequence | None = None):
        if entries is None:
            return flint.fmpq_mat(rows, cols) if self.p is None else flint.nmod_mat(rows, cols, self.p)
        entries = [self._raw(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        if self.p is None:
            return flint.fmpq_mat(rows, cols, entries)
        return flint.nmod_mat(rows, cols, entries, self.p)

    def from_rows(self, rows: Sequence[Sequence]):
        r = len(rows)
        c = len(rows[0]) if r else 0
        return self.matrix(r, c, [x for row in rows for x in row])

    def from_sparse(self, rows: int, cols: int, data: Mapping[tuple[int, int], object]):
        flat = [0] * (rows * cols)
        for (i, j), v in data.items():
            flat[i * cols + j] = v
        return self.matrix(rows, cols, flat)

    def from_columns(self, rows: int, columns: Sequence[Mapping[int, object]]):
        """Matrix whose ``j``-th column is the sparse vector ``columns[j]``."""
        cols = len(columns)
        flat = [0] * (rows * cols)
        for j, col in enumerate(columns):
            for i, v in col.items():
                flat[i * cols + j] = v
        return self.matrix(rows, cols, flat)

    def zeros(self, rows: int, cols: int):
        return self.matrix(rows, cols)

    def identity(self, n: int):
        return self.from_sparse(n, n, {(i, i): 1 for i in range(n)})

    def vector(self, values: Sequence):
        return self.matrix(len(values), 1, list(values))

    def unit_vector(self, n: int, i: int):
        return self.from_sparse(n, 1, {(i, 0): 1})


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_of(m) -> Field:
    if isinstance(m, flint.fmpq_mat):
        return QQ
    return Field(int(m.modulus()))


# ---------------------------------------------------------------------------
# matrix helpers

def shape(m) -> tuple[int, int]:
    return m.nrows(), m.ncols()


def entries(m) -> list[list]:
    return m.tolist()


def is_zero(m) -> bool:
    r, c = shape(m)
    return r == 0 or c == 0 or m == field_of(m).zeros(r, c)


def mat_equal(a, b) -> bool:
    return shape(a) == shape(b) and (a.nrows() == 0 or a.ncols() == 0 or a == b)


def nonzero_entries(m) -> dict[tuple[int, int], object]:
    out = {}
    for i, row in enumerate(m.tolist()):
        for j, v in enumerate(row):
            if v != 0:
                out[i, j] = v
    return out


def columns_sparse(m) -> list[dict[int, object]]:
    r, c = shape(m)
    cols: list[dict[int, object]] = [dict() for _ in range(c)]
    for i, row in enumerate(m.tolist()):
        for j, v in enumerate(row):
            if v != 0:
                cols[j][i] = v
    return cols


def submatrix(m, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None):
    F = field_of(m)
    data = m.tolist()
    rows = range(m.nrows()) if rows is None else rows
    cols = range(m.ncols()) if cols is None else cols
    rows, cols = list(rows), list(cols)
    return F.matrix(len(rows), len(cols), [data[i][j] for i in rows for j in cols])


def hstack(F: Field, mats: Sequence, rows: int | None = None):
    if not mats:
        return F.zeros(rows or 0, 0)
    r = mats[0].nrows()
    data = [m.tolist() for m in mats]
    out = []
    for i in range(r):
        for d in data:
            out.extend(d[i])
    return F.matrix(r, sum(m.ncols() for m in mats), out)


def vstack(F: Field, mats: Sequence, cols: int | None = None):
    if not mats:
        return F.zeros(0, cols or 0)
    c = mats[0].ncols()
    out = []
    for m in mats:
        for row in m.tolist():
            out.extend(row)
    return F.matrix(sum(m.nrows() for m in mats), c, out)


def block_diag(F: Field, mats: Sequence):
    R = sum(m.nrows() for m in mats)
    C = sum(m.ncols() for m in mats)
    data = {}
    r0 = c0 = 0
    for m in mats:
        for (i, j), v in nonzero_entries(m).items():
            data[r0 + i, c0 + j] = v
        r0 += m.nrows()
        c0 += m.ncols()
    return F.from_sparse(R, C, data)


def kron(a, b):
    """Kronecker product with the lexicographic index convention (i, j) -> i*dim2 + j."""
    F = field_of(a)
    ra, ca = shape(a)
    rb, cb = shape(b)
    A = nonzero_entries(a)
    B = nonzero_entries(b)
    data = {}
    for (i, j), x in A.items():
        for (k, l), y in B.items():
            data[i * rb + k, j * cb + l] = x * y
    return F.from_sparse(ra * rb, ca * cb, data)


def kron_all(mats: Sequence):
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def vec(m):
    """Column-major vectorisation: vec(A X B) = (B^T kron A) vec(X)."""
    F = field_of(m)
    r, c = shape(m)
    data = m.tolist()
    return F.matrix(r * c, 1, [data[i][j] for j in range(c) for i in range(r)])


def unvec(v, rows: int, cols: int):
    F = field_of(v)
    flat = [row[0] for row in v.tolist()]
    return F.matrix(rows, cols, [flat[j * rows + i] for i in range(rows) for j in range(cols)])


def mat_power(m, k: int):
    F = field_of(m)
    out = F.identity(m.nrows())
    base = m
    while k > 0:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# echelon machinery

def rref(m):
    """Reduced row-echelon form and pivot columns (leftmost pivots)."""
    r, c = shape(m)
    if r == 0 or c == 0:
        return m, []
    R, rank = m.rref()
    data = R.tolist()
    pivots = []
    for i in range(rank):
        row = data[i]
        j = pivots[-1] + 1 if pivots else 0
        while row[j] == 0:
            j += 1
        pivots.append(j)
    return R, pivots


def rank(m) -> int:
    r, c = shape(m)
    if r == 0 or c == 0:
        return 0
    return m.rank()


def nullspace(m):
    """Canonical kernel basis as the columns of the returned matrix.

    Basis vector ``k`` has a 1 in the ``k``-th free column and zeros in the
    other free columns.
    """
    F = field_of(m)
    r, c = shape(m)
    R, pivots = rref(m)
    free = [j for j in range(c) if j not in set(pivots)]
    data = R.tolist() if r and c else []
    cols = []
    for f in free:
        col = {f: 1}
        for i, pj in enumerate(pivots):
            v = data[i][f]
            if v != 0:
                col[pj] = -v
        cols.append(col)
    return F.from_columns(c, cols)


def column_space(m):
    """Echelon-reduced basis of the column space (columns of the result)."""
    F = field_of(m)
    R, pivots = rref(m.transpose())
    return submatrix(R, range(len(pivots)), None).transpose() if pivots else F.zeros(m.nrows(), 0)


def solve_affine(a, b):
    """Echelon-canonical particular solution of ``a x = b`` or ``None``.

    Free variables are set to zero.  ``b`` may have several columns.
    """
    F = field_of(a)
    r, c = shape(a)
    k = b.ncols()
    if r == 0:
        return F.zeros(c, k)
    aug = hstack(F, [a, b])
    R, pivots = rref(aug)
    if pivots and pivots[-1] >= c:
        return None
    data = R.tolist()
    out = {}
    for i, pj in enumerate(pivots):
        for t in range(k):
            v = data[i][c + t]
            if v != 0:
                out[pj, t] = v
    return F.from_sparse(c, k, out)


def inverse(m):
    if m.nrows() == 0:
        return m
    return m.inv()


def in_column_space(basis, v) -> bool:
    return solve_affine(basis, v) is not None


def intersect_subspaces(a, b):
    """Basis (columns) of col(a) ∩ col(b)."""
    F = field_of(a)
    n = a.nrows()
    if a.ncols() == 0 or b.ncols() == 0:
        return F.zeros(n, 0)
    K = nullspace(hstack(F, [a, -b]))
    if K.ncols() == 0:
        return F.zeros(n, 0)
    part = submatrix(K, range(a.ncols()), None)
    return column_space(a * part)


# ---------------------------------------------------------------------------
# spaces and maps

@dataclass(frozen=True)
class VectorSpace:
    dim: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"v{i}" for i in range(self.dim)))
        if len(self.labels) != self.dim:
            raise ValueError("number of labels must equal the dimension")

    def tensor(self, other: "VectorSpace") -> "VectorSpace":
        return VectorSpace(self.dim * other.dim,
                           tuple(f"{a}|{b}" for a in self.labels for b in other.labels))


def tensor_spaces(spaces: Iterable[VectorSpace]) -> VectorSpace:
    spaces = list(spaces)
    out = spaces[0]
    for s in spaces[1:]:
        out = out.tensor(s)
    return out


@dataclass(frozen=True, eq=False)
class LinMap:
    domain: VectorSpace
    codomain: VectorSpace
    matrix: object
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        if shape(self.matrix) != (self.codomain.dim, self.domain.dim):
            raise ValueError(
                f"matrix shape {shape(self.matrix)} does not match "
                f"{self.codomain.dim}x{self.domain.dim}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if other.codomain.dim != self.domain.dim:
            raise ValueError("cannot compose: dimension mismatch")
        return LinMap(other.domain, self.codomain, self.matrix * other.matrix, self.field)

    def __eq__(self, other):
        return isinstance(other, LinMap) and mat_equal(self.matrix, other.matrix)

    __hash__ = None

    @classmethod
    def identity(cls, space: VectorSpace, F: Field) -> "LinMap":
        return cls(space, space, F.identity(space.dim), F)


# ---------------------------------------------------------------------------
# the three public operations

@dataclass(frozen=True)
class KernelImage:
    kernel: list      # column vectors
    image: list       # column vectors
    rank: int


def kernel_image(f: LinMap) -> KernelImage:
    K = nullspace(f.matrix)
    I = column_space(f.matrix)
    ker = [submatrix(K, None, [j]) for j in range(K.ncols())]
    img = [submatrix(I, None, [j]) for j in range(I.ncols())]
    return KernelImage(ker, img, len(img))


@dataclass(frozen=True)
class Factorization:
    h: LinMap
    solution_dim: int


def solve_factorization(f: LinMap, g: LinMap, side: str = "left") -> Factorization | None:
    """Find ``h`` with ``g∘h = f`` (``side="left"``) or ``h∘g = f`` (``side="right"``).

    Returns the echelon-canonical particular solution together with the
    dimension of the affine solution space, or ``None`` if the system is
    inconsistent.
    """
    F = f.field
    if side == "left":
        if g.codomain.dim != f.codomain.dim:
            raise ValueError("shape mismatch: codomain(g) must equal codomain(f)")
        h = solve_affine(g.matrix, f.matrix)
        if h is None:
            return None
        free = (g.domain.dim - rank(g.matrix)) * f.domain.dim
        return Factorization(LinMap(f.domain, g.domain, h, F), free)
    if side == "right":
        if g.domain.dim != f.domain.dim:
            raise ValueError("shape mismatch: domain(g) must equal domain(f)")
        ht = solve_affine(g.matrix.transpose(), f.matrix.transpose())
        if ht is None:
            return None
        free = (g.codomain.dim - rank(g.matrix)) * f.codomain.dim
        return Factorization(LinMap(g.codomain, f.codomain, ht.transpose(), F), free)
    raise ValueError("side must be 'left' or 'right'")


@dataclass(frozen=True)
class QuotientData:
    quotient: VectorSpace
    projection: LinMap
    section: LinMap
    retraction: LinMap


def quotient_and_section(incl: LinMap) -> QuotientData:
    """Split ``0 -> V -> W -> W/V -> 0`` with echelon-canonical choices.

    The complement of the image is spanned by the unit vectors at the
    non-pivot columns of the echelon form of the image.
    """
    F = incl.field
    V, W = incl.domain, incl.codomain
    if rank(incl.matrix) != V.dim:
        raise ValueError("inclusion is not injective")
    _, pivots = rref(incl.matrix.transpose())
    comp = [j for j in range(W.dim) if j not in set(pivots)]
    E = F.from_columns(W.dim, [{j: 1} for j in comp])
    B = hstack(F, [incl.matrix, E]) if V.dim else E
    Binv = inverse(B)
    retr = submatrix(Binv, range(V.dim), None)
    proj = submatrix(Binv, range(V.dim, W.dim), None)
    Q = VectorSpace(len(comp), tuple(W.labels[j] for j in comp))
    return QuotientData(Q, LinMap(W, Q, proj, F), LinMap(Q, W, E, F), LinMap(W, V, retr, F))


def format_scalar(x) -> str:
    return str(x)


def permute_factors(F: Field, dims: Sequence[int], order: Sequence[int]):
    """Matrix of ``V_0⊗…⊗V_{r-1} -> V_{order[0]}⊗…⊗V_{order[r-1]}`` (a shuffle of factors)."""
    r = len(dims)
    if sorted(order) != list(range(r)):
        raise ValueError("order must be a permutation")
    out_dims = [dims[o] for o in order]
    total = 1
    for d in dims:
        total *= d
    data = {}
    for src in range(total):
        # digits of src in the input ordering
        digits = []
        x = src
        for d in reversed(dims):
            x, rem = divmod(x, d)
            digits.append(rem)
        digits.reverse()
        tgt = 0
        for o, d in zip(order, out_dims):
            tgt = tgt * d + digits[o]
        data[tgt, src] = 1
    return F.from_sparse(total, total, data)
