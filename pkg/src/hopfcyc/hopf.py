"""
Finite-dimensional Hopf algebras given by structure constants.

Tensor index convention (frozen): the basis of ``H⊗H`` is ordered
lexicographically, ``(i, j) -> i*d + j``.  This is the ordering produced by
``exactlin.kron`` and every operator matrix in the package depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import exactlin as el
from .exactlin import Field, LinMap, VectorSpace, kron, mat_equal


def swap_matrix(F: Field, d1: int, d2: int):
    """The flip ``V⊗W -> W⊗V`` for ``dim V = d1``, ``dim W = d2``."""
    return F.from_sparse(d1 * d2, d1 * d2,
                         {(j * d1 + i, i * d2 + j): 1 for i in range(d1) for j in range(d2)})


def middle_swap(F: Field, a: int, b: int, c: int, d: int):
    """``A⊗B⊗C⊗D -> A⊗C⊗B⊗D`` (the ``id⊗τ⊗id`` shuffle)."""
    return kron(kron(F.identity(a), swap_matrix(F, b, c)), F.identity(d))


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    name: str
    field: Field
    space: VectorSpace
    mult: object       # d x d^2
    unit: object       # d x 1
    comult: object     # d^2 x d
    counit: object     # 1 x d
    antipode: object   # d x d

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def index(self, label: str) -> int:
        return self.space.labels.index(label)

    def one(self):
        return self.unit

    def identity(self):
        return self.field.identity(self.dim)

    def same_as(self, other: "HopfAlgebra") -> bool:
        if self is other:
            return True
        return (self.field == other.field and self.dim == other.dim
                and all(mat_equal(getattr(self, t), getattr(other, t))
                        for t in ("mult", "unit", "comult", "counit", "antipode")))

    # linear maps for reporting
    def as_map(self, table: str) -> LinMap:
        H, k = self.space, VectorSpace(1, ("u",))
        HH = H.tensor(H)
        dom, cod = {
            "mult": (HH, H), "unit": (k, H), "comult": (H, HH),
            "counit": (H, k), "antipode": (H, H),
        }[table]
        return LinMap(dom, cod, getattr(self, table), self.field)

    def multiply(self, a, b):
        """Product of two column vectors in H."""
        return self.mult * kron(a, b)

    def element(self, coeffs: dict[str, object]):
        return self.field.from_sparse(self.dim, 1, {(self.index(k), 0): v for k, v in coeffs.items()})


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)
    shape_errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.shape_errors

    def __bool__(self):
        return self.ok


HOPF_AXIOMS = (
    "associativity", "unitality", "coassociativity", "counitality",
    "comultiplication_is_algebra_map", "counit_is_algebra_map",
    "antipode_left", "antipode_right",
)


def _shape_errors(h: HopfAlgebra) -> list[str]:
    d = h.dim
    want = {"mult": (d, d * d), "unit": (d, 1), "comult": (d * d, d),
            "counit": (1, d), "antipode": (d, d)}
    return [f"{t}: expected {s}, got {el.shape(getattr(h, t))}"
            for t, s in want.items() if el.shape(getattr(h, t)) != s]


def bialgebra_failures(F: Field, d: int, m, u, D, e) -> list[str]:
    """Algebra, coalgebra and compatibility identities as exact matrix equalities."""
    I = F.identity(d)
    one = F.identity(1)
    out = []
    if not mat_equal(m * kron(m, I), m * kron(I, m)):
        out.append("associativity")
    if not (mat_equal(m * kron(u, I), I) and mat_equal(m * kron(I, u), I)):
        out.append("unitality")
    if not mat_equal(kron(D, I) * D, kron(I, D) * D):
        out.append("coassociativity")
    if not (mat_equal(kron(e, I) * D, I) and mat_equal(kron(I, e) * D, I)):
        out.append("counitality")
    mm = kron(m, m) * middle_swap(F, d, d, d, d)
    if not (mat_equal(D * m, mm * kron(D, D)) and mat_equal(D * u, kron(u, u))):
        out.append("comultiplication_is_algebra_map")
    if not (mat_equal(e * m, kron(e, e)) and mat_equal(e * u, one)):
        out.append("counit_is_algebra_map")
    return out


def antipode_failures(F: Field, d: int, m, u, D, e, S) -> list[str]:
    I = F.identity(d)
    ue = u * e
    out = []
    if not mat_equal(m * kron(S, I) * D, ue):
        out.append("antipode_left")
    if not mat_equal(m * kron(I, S) * D, ue):
        out.append("antipode_right")
    return out


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    """Check the eight Hopf algebra identities exactly.

    Returns a report whose ``failures`` names each violated axiom; shape
    problems go to ``shape_errors`` and suppress the axiom checks.
    """
    rep = ValidationReport(shape_errors=_shape_errors(h))
    if rep.shape_errors:
        return rep
    F, d = h.field, h.dim
    rep.failures += bialgebra_failures(F, d, h.mult, h.unit, h.comult, h.counit)
    rep.failures += antipode_failures(F, d, h.mult, h.unit, h.comult, h.counit, h.antipode)
    return rep


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The linear dual H* with transposed structure tables (dual basis order)."""
    return HopfAlgebra(
        name=f"{h.name}*",
        field=h.field,
        space=VectorSpace(h.dim, tuple(f"{l}*" for l in h.labels)),
        mult=h.comult.transpose(),
        unit=h.counit.transpose(),
        comult=h.mult.transpose(),
        counit=h.unit.transpose(),
        antipode=h.antipode.transpose(),
    )


def is_commutative(h: HopfAlgebra) -> bool:
    return mat_equal(h.mult, h.mult * swap_matrix(h.field, h.dim, h.dim))


def is_cocommutative(h: HopfAlgebra) -> bool:
    return mat_equal(h.comult, swap_matrix(h.field, h.dim, h.dim) * h.comult)


# ---------------------------------------------------------------------------
# integrals

def integral_space(h: HopfAlgebra):
    """Basis (rows of the returned matrix) of left integrals Λ: H -> k.

    Solves ``(id⊗Λ)∘Δ = η∘Λ`` in the ``d`` unknowns ``Λ(e_i)``.
    """
    F, d = h.field, h.dim
    Dcols = el.columns_sparse(h.comult)
    unit = [h.unit[i, 0] for i in range(d)]
    # equation (r, c): coefficient of e_r in (id⊗Λ)Δ(e_c) - Λ(e_c)·1
    eqs: dict[tuple[int, int], object] = {}
    for c in range(d):
        for idx, v in Dcols[c].items():
            r, s = divmod(idx, d)
            key = (r * d + c, s)
            eqs[key] = eqs.get(key, 0) + v
        for r in range(d):
            if unit[r] != 0:
                key = (r * d + c, c)
                eqs[key] = eqs.get(key, 0) - unit[r]
    A = F.from_sparse(d * d, d, eqs)
    return el.nullspace(A).transpose()


@dataclass(frozen=True, eq=False)
class IntegralData:
    left: object           # 1 x d, Λ
    right: object          # 1 x d, Λ' = Λ∘S
    x_index: int | None    # basis index of the chosen x
    x: object | None       # d x 1 column
    is_cofrobenius: bool

    def right_value(self, v):
        return (self.right * v)[0, 0]


def cofrobenius_data(h: HopfAlgebra) -> IntegralData:
    """Normalized left integral, the right integral Λ∘S and the chosen x.

    Λ is scaled so that its first nonzero value (basis order) is 1; x is the
    first basis vector on which Λ∘S does not vanish.
    """
    basis = integral_space(h)
    if basis.nrows() != 1:
        raise ValueError(f"integral space has dimension {basis.nrows()}, expected 1 "
                         "(input is not a valid finite-dimensional Hopf algebra)")
    row = basis.tolist()[0]
    lead = next(v for v in row if v != 0)
    lam = basis * (h.field(1) / lead)
    lam_p = lam * h.antipode
    vals = lam_p.tolist()[0]
    xi = next((i for i, v in enumerate(vals) if v != 0), None)
    x = h.field.unit_vector(h.dim, xi) if xi is not None else None
    return IntegralData(lam, lam_p, xi, x, xi is not None)


def is_right_integral(h: HopfAlgebra, lam):
    """``(Λ⊗id)Δ = η∘Λ`` as maps H -> H."""
    return mat_equal(kron(lam, h.identity()) * h.comult, h.unit * lam)


def is_left_integral(h: HopfAlgebra, lam):
    return mat_equal(kron(h.identity(), lam) * h.comult, h.unit * lam)


def is_cosemisimple(h: HopfAlgebra, integ: IntegralData | None = None) -> bool:
    integ = integ or cofrobenius_data(h)
    return (integ.left * h.unit)[0, 0] != 0


# ---------------------------------------------------------------------------
# constructors used by tests and for generating the bundled data files

def group_algebra(n: int, F: Field, name: str | None = None) -> HopfAlgebra:
    """kC_n with basis e, g, g^2, ... (Δg = g⊗g, S(g) = g^-1)."""
    labels = tuple(["e", "g"] + [f"g{k}" for k in range(2, n)])[:n] if n > 1 else ("e",)
    d = n
    mult = F.from_sparse(d, d * d, {((i + j) % n, i * d + j): 1 for i in range(n) for j in range(n)})
    unit = F.from_sparse(d, 1, {(0, 0): 1})
    comult = F.from_sparse(d * d, d, {(i * d + i, i): 1 for i in range(n)})
    counit = F.from_sparse(1, d, {(0, i): 1 for i in range(n)})
    antipode = F.from_sparse(d, d, {((-i) % n, i): 1 for i in range(n)})
    tag = "Q" if F.is_rational else f"F{F.p}"
    return HopfAlgebra(name or f"{tag}C{n}", F, VectorSpace(d, labels),
                       mult, unit, comult, counit, antipode)


def sweedler(F: Field, name: str = "sweedler") -> HopfAlgebra:
    """Sweedler's 4-dimensional algebra: g^2=1, x^2=0, xg=-gx, Δx = x⊗1 + g⊗x."""
    if F.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic != 2")
    labels = ("e", "g", "x", "gx")
    # basis elements as (power of g, power of x) in normal order g^a x^b
    elts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {e: i for i, e in enumerate(elts)}
    d = 4
    mult = {}
    for i, (a1, b1) in enumerate(elts):
        for j, (a2, b2) in enumerate(elts):
            if b1 + b2 > 1:
                continue
            # g^a1 x^b1 g^a2 x^b2 = (-1)^(b1*a2) g^(a1+a2) x^(b1+b2)
            sign = -1 if (b1 * a2) % 2 else 1
            mult[idx[((a1 + a2) % 2, b1 + b2)], i * d + j] = sign
    unit = {(0, 0): 1}
    comult = {}
    # Δ(1)=1⊗1, Δ(g)=g⊗g, Δ(x)=x⊗1+g⊗x, Δ(gx)=gx⊗g+1⊗gx
    comult[0 * d + 0, 0] = 1
    comult[1 * d + 1, 1] = 1
    comult[2 * d + 0, 2] = 1
    comult[1 * d + 2, 2] = 1
    comult[3 * d + 1, 3] = 1
    comult[0 * d + 3, 3] = 1
    counit = {(0, 0): 1, (0, 1): 1}
    # S(g)=g, S(x)=-gx, S(gx)=x
    antipode = {(0, 0): 1, (1, 1): 1, (3, 2): -1, (2, 3): 1}
    return HopfAlgebra(name, F, VectorSpace(d, labels),
                       F.from_sparse(d, d * d, mult), F.from_sparse(d, 1, unit),
                       F.from_sparse(d * d, d, comult), F.from_sparse(1, d, counit),
                       F.from_sparse(d, d, antipode))


def trivial_hopf(F: Field, name: str = "k") -> HopfAlgebra:
    return group_algebra(1, F, name)
