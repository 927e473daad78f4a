"""
Right H-comodules, colinear maps and the H*-module view.

A comodule is a space M with a coaction matrix ``rho`` of shape
``(dim M * dim H) x dim M``; row ``m*d + i`` holds the coefficient of
``e_m ⊗ h_i``.  For the dual basis functional ``h_i*`` the matrix
``act[i] = (id⊗h_i*)∘ρ`` is the action of ``h_i*`` on M, so the coaction is
equivalently the family of ``d`` square matrices ``act``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import exactlin as el
from .exactlin import Field, LinMap, VectorSpace, kron, mat_equal
from .hopf import HopfAlgebra, ValidationReport, middle_swap, swap_matrix


class HopfMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Comodule:
    name: str
    hopf: HopfAlgebra
    space: VectorSpace
    coaction: object

    @property
    def field(self) -> Field:
        return self.hopf.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def act(self) -> list:
        """``act[i]``: the action of the dual basis functional ``h_i*``."""
        d, n = self.hopf.dim, self.dim
        return [el.submatrix(self.coaction, [m * d + i for m in range(n)], None)
                for i in range(d)]

    def relabel(self, name: str) -> "Comodule":
        return Comodule(name, self.hopf, self.space, self.coaction)


@dataclass(frozen=True, eq=False)
class ColinearMap:
    source: Comodule
    target: Comodule
    matrix: object

    def __post_init__(self):
        if el.shape(self.matrix) != (self.target.dim, self.source.dim):
            raise ValueError("matrix shape does not match source/target")

    def linmap(self) -> LinMap:
        return LinMap(self.source.space, self.target.space, self.matrix, self.source.field)

    def __matmul__(self, other: "ColinearMap") -> "ColinearMap":
        return ColinearMap(other.source, self.target, self.matrix * other.matrix)


def check_same_hopf(*comods: Comodule) -> HopfAlgebra:
    h = comods[0].hopf
    for c in comods[1:]:
        if not h.same_as(c.hopf):
            raise HopfMismatch(f"{comods[0].name} and {c.name} are comodules over different Hopf algebras")
    return h


# ---------------------------------------------------------------------------
# validation and colinearity

def validate_comodule(c: Comodule) -> ValidationReport:
    h = c.hopf
    d, n = h.dim, c.dim
    rep = ValidationReport()
    if el.shape(c.coaction) != (n * d, n):
        rep.shape_errors.append(f"coaction: expected {(n * d, n)}, got {el.shape(c.coaction)}")
        return rep
    F = c.field
    In, Id = F.identity(n), F.identity(d)
    rho = c.coaction
    if not mat_equal(kron(In, h.comult) * rho, kron(rho, Id) * rho):
        rep.failures.append("coassociativity")
    if not mat_equal(kron(In, h.counit) * rho, In):
        rep.failures.append("counitality")
    return rep


def colinearity_defect(f, M: Comodule, N: Comodule):
    """``ρ_N∘f − (f⊗id)∘ρ_M``."""
    return N.coaction * f - kron(f, M.hopf.identity()) * M.coaction


def is_colinear(f, M: Comodule, N: Comodule) -> bool:
    return el.is_zero(colinearity_defect(f, M, N))


def colinear(f, M: Comodule, N: Comodule) -> ColinearMap:
    if not is_colinear(f, M, N):
        raise ValueError(f"map {M.name} -> {N.name} is not colinear")
    return ColinearMap(M, N, f)


def _hom_system(M: Comodule, N: Comodule):
    """Matrix of ``vec(f) ↦ vec(ρ_N f − (f⊗id)ρ_M)`` (column-major vec)."""
    F = M.field
    d, m, n = M.hopf.dim, M.dim, N.dim
    # vec(ρ_N f) = (I_m ⊗ ρ_N) vec f
    left = kron(F.identity(m), N.coaction)
    # ((f⊗id)ρ_M)[(b,i), c] = Σ_a f[b,a] ρ_M[(a,i), c]
    data: dict[tuple[int, int], object] = {}
    rows = n * d
    for (ai, c), v in el.nonzero_entries(M.coaction).items():
        a, i = divmod(ai, d)
        for b in range(n):
            data[c * rows + b * d + i, a * n + b] = v
    right = F.from_sparse(rows * m, n * m, data)
    return left - right


def hom_colinear(M: Comodule, N: Comodule) -> list:
    """Basis of Hom^H(M, N) as a list of ``dim N x dim M`` matrices."""
    check_same_hopf(M, N)
    K = el.nullspace(_hom_system(M, N))
    return [el.unvec(el.submatrix(K, None, [j]), N.dim, M.dim) for j in range(K.ncols())]


# ---------------------------------------------------------------------------
# constructions

def trivial_comodule(h: HopfAlgebra, dim: int = 1, name: str = "k") -> Comodule:
    F = h.field
    labels = ("u",) if dim == 1 else tuple(f"u{i}" for i in range(dim))
    return Comodule(name, h, VectorSpace(dim, labels), kron(F.identity(dim), h.unit))


def regular_comodule(h: HopfAlgebra, name: str | None = None) -> Comodule:
    return Comodule(name or h.name, h, h.space, h.comult)


def grouplike_comodule(h: HopfAlgebra, label: str, name: str | None = None) -> Comodule:
    """One-dimensional comodule ``k_g`` with ``ρ(1) = 1⊗g``."""
    g = h.field.unit_vector(h.dim, h.index(label))
    return Comodule(name or f"k_{label}", h, VectorSpace(1, ("u",)), g)


def cofree(V: VectorSpace, h: HopfAlgebra, name: str = "cofree") -> Comodule:
    """``V⊗H`` with coaction ``id⊗Δ``."""
    return Comodule(name, h, V.tensor(h.space), kron(h.field.identity(V.dim), h.comult))


def cofree_on(M: Comodule) -> Comodule:
    return cofree(M.space, M.hopf, f"{M.name}⊗H")


def tensor_diagonal(M: Comodule, N: Comodule, name: str | None = None) -> Comodule:
    """``M⊗N`` with ``ρ(m⊗n) = m_0⊗n_0⊗m_1 n_1``."""
    h = check_same_hopf(M, N)
    F, d = h.field, h.dim
    shuffle = middle_swap(F, M.dim, d, N.dim, d)
    rho = kron(F.identity(M.dim * N.dim), h.mult) * shuffle * kron(M.coaction, N.coaction)
    return Comodule(name or f"{M.name}⊗{N.name}", h, M.space.tensor(N.space), rho)


def diagonal_free(M: Comodule) -> Comodule:
    """``M⊗H`` with the diagonal coaction (H regular)."""
    return tensor_diagonal(M, regular_comodule(M.hopf), f"{M.name}⊗H")


def direct_sum(M: Comodule, N: Comodule, name: str | None = None) -> Comodule:
    h = check_same_hopf(M, N)
    F, d = h.field, h.dim
    m, n = M.dim, N.dim
    # reorder block-diagonal rows from (M⊗H) ⊕ (N⊗H) to (M⊕N)⊗H: same order
    rho = el.block_diag(F, [M.coaction, N.coaction])
    labels = tuple(f"{l}" for l in M.space.labels) + tuple(f"{l}'" for l in N.space.labels)
    return Comodule(name or f"{M.name}⊕{N.name}", h, VectorSpace(m + n, labels), rho)


def subcomodule(M: Comodule, basis, name: str = "sub") -> tuple[Comodule, object]:
    """Comodule structure on the span of the (independent) columns of ``basis``.

    Returns the subcomodule and the inclusion matrix; raises if the span is
    not a subcomodule.
    """
    F, d = M.field, M.hopf.dim
    k = basis.ncols()
    if k == 0:
        return Comodule(name, M.hopf, VectorSpace(0, ()), F.zeros(0, 0)), F.zeros(M.dim, 0)
    big = kron(basis, F.identity(d))
    rho = el.solve_affine(big, M.coaction * basis)
    if rho is None:
        raise ValueError("span is not a subcomodule")
    return Comodule(name, M.hopf, VectorSpace(k, tuple(f"w{i}" for i in range(k))), rho), basis


def quotient_comodule(M: Comodule, incl, name: str = "quot"):
    """Quotient of M by the subcomodule spanned by the columns of ``incl``.

    Returns ``(Q, projection, section)`` with echelon-canonical section.
    """
    F, d = M.field, M.hopf.dim
    sub_space = VectorSpace(incl.ncols(), tuple(f"w{i}" for i in range(incl.ncols())))
    qd = el.quotient_and_section(LinMap(sub_space, M.space, incl, F))
    P, Sc = qd.projection.matrix, qd.section.matrix
    rho = kron(P, F.identity(d)) * M.coaction * Sc
    Q = Comodule(name, M.hopf, qd.quotient, rho)
    return Q, P, Sc


def comodule_from_coaction_rows(h: HopfAlgebra, act: list, name: str, labels=None) -> Comodule:
    """Assemble a coaction from the dual-basis action matrices."""
    F, d = h.field, h.dim
    n = act[0].nrows()
    data = {}
    for i, a in enumerate(act):
        for (r, c), v in el.nonzero_entries(a).items():
            data[r * d + i, c] = v
    return Comodule(name, h, VectorSpace(n, labels or ()), F.from_sparse(n * d, n, data))


# ---------------------------------------------------------------------------
# untwisting

def untwist_iso(M: Comodule) -> tuple[ColinearMap, ColinearMap]:
    """``(M⊗H, diagonal) ≅ (M⊗H, id⊗Δ)``: ``m⊗h ↦ m_0⊗m_1 h``, inverse ``m⊗h ↦ m_0⊗S(m_1)h``."""
    h = M.hopf
    F, d, n = h.field, h.dim, M.dim
    Id, In = F.identity(d), F.identity(n)
    spread = kron(M.coaction, Id)                 # M⊗H -> M⊗H⊗H
    fwd = kron(In, h.mult) * spread
    bwd = kron(In, h.mult) * kron(kron(In, h.antipode), Id) * spread
    diag = diagonal_free(M)
    free = cofree_on(M)
    return ColinearMap(diag, free, fwd), ColinearMap(free, diag, bwd)


# ---------------------------------------------------------------------------
# the H*-module view

@dataclass(frozen=True, eq=False)
class HStarAction:
    """Left action of the dual algebra H* on a comodule: ``x·m = m_0 x(m_1)``."""
    comodule: Comodule
    matrices: list         # matrices[i] = action of the dual basis vector h_i*

    def act(self, x):
        """Action matrix of ``x`` given as a ``1 x d`` row (a functional on H)."""
        F = self.comodule.field
        out = F.zeros(self.comodule.dim, self.comodule.dim)
        for i, v in enumerate(x.tolist()[0]):
            if v != 0:
                out = out + self.matrices[i] * v
        return out


def hstar_module_view(M: Comodule) -> HStarAction:
    return HStarAction(M, M.act)


def hstar_equivariant_maps(M: Comodule, N: Comodule) -> list:
    """Basis of the maps f with ``f∘(x·) = (x·)∘f`` for every x in H*."""
    check_same_hopf(M, N)
    F = M.field
    m, n = M.dim, N.dim
    blocks = [kron(a.transpose(), F.identity(n)) - kron(F.identity(m), b)
              for a, b in zip(M.act, N.act)]
    K = el.nullspace(el.vstack(F, blocks))
    return [el.unvec(el.submatrix(K, None, [j]), n, m) for j in range(K.ncols())]


def span_matrix(F: Field, mats: list, rows: int, cols: int):
    """Column-stacked vecs of a list of matrices (for subspace comparisons)."""
    if not mats:
        return F.zeros(rows * cols, 0)
    return el.hstack(F, [el.vec(x) for x in mats])


def same_span(F: Field, a: list, b: list, rows: int, cols: int) -> bool:
    A, B = span_matrix(F, a, rows, cols), span_matrix(F, b, rows, cols)
    ra, rb = el.rank(A), el.rank(B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return el.rank(el.hstack(F, [A, B])) == ra


# ---------------------------------------------------------------------------
# maps out of cofree comodules

@dataclass(frozen=True, eq=False)
class CofreeGenerator:
    """A generator ``h0`` of H as a left H*-module and the inverse of its orbit matrix.

    Column ``j`` of ``G`` is ``h_j*·h0``; with ``Ginv = G^{-1}`` every colinear map
    ``(V⊗H, id⊗Δ) -> N`` is ``v⊗h_i ↦ Σ_j Ginv[j,i] (h_j*·φ(v))`` for a unique
    linear ``φ: V -> N``.
    """
    h0: object
    Ginv: object


def _orbit_matrix(h: HopfAlgebra, h0):
    d = h.dim
    data = {}
    vals = [h0[a, 0] for a in range(d)]
    for (ij, a), v in el.nonzero_entries(h.comult).items():
        if vals[a] != 0:
            i, j = divmod(ij, d)
            data[i, j] = data.get((i, j), 0) + v * vals[a]
    return h.field.from_sparse(d, d, data)


_GEN_CACHE: dict[int, tuple[HopfAlgebra, CofreeGenerator]] = {}


def cofree_generator(h: HopfAlgebra) -> CofreeGenerator:
    key = id(h)
    hit = _GEN_CACHE.get(key)
    if hit is not None and hit[0] is h:
        return hit[1]
    F, d = h.field, h.dim
    candidates = [F.unit_vector(d, i) for i in range(d)]
    candidates.append(F.vector([1] * d))
    candidates += [F.vector([(i * i + k) % 5 + 1 for i in range(d)]) for k in range(2 * d + 5)]
    for c in candidates:
        G = _orbit_matrix(h, c)
        if el.rank(G) == d:
            gen = CofreeGenerator(c, el.inverse(G))
            _GEN_CACHE[key] = (h, gen)
            return gen
    raise RuntimeError(f"no generator of {h.name} as an H*-module found")


def cofree_map(phi, N: Comodule, vdim: int):
    """The colinear map ``(V⊗H, id⊗Δ) -> N`` determined by ``φ: V -> N``."""
    h = N.hopf
    gen = cofree_generator(h)
    F, d = h.field, h.dim
    Ginv = gen.Ginv
    acts = [a * phi for a in N.act]
    blocks = []
    for i in range(d):
        Bi = F.zeros(N.dim, vdim)
        for j in range(d):
            g = Ginv[j, i]
            if g != 0:
                Bi = Bi + acts[j] * g
        blocks.append(Bi)
    # column v*d + i is block i, column v
    data = {}
    for i, Bi in enumerate(blocks):
        for (r, v), x in el.nonzero_entries(Bi).items():
            data[r, v * d + i] = x
    return F.from_sparse(N.dim, vdim * d, data)


def _through_rho_operator(M: Comodule, N: Comodule):
    """Matrix of ``vec φ ↦ vec(cofree_map(φ)∘ρ_M)``."""
    h = M.hopf
    gen = cofree_generator(h)
    F, d = h.field, h.dim
    total = F.zeros(N.dim * M.dim, N.dim * M.dim)
    Ginv = gen.Ginv
    for i in range(d):
        RiT = M.act[i].transpose()
        for j in range(d):
            g = Ginv[j, i]
            if g != 0:
                total = total + kron(RiT, N.act[j]) * g
    return total


def factor_through_coaction(f, M: Comodule, N: Comodule):
    """A colinear ``w: (M⊗H, id⊗Δ) -> N`` with ``w∘ρ_M = f``, or ``None``."""
    check_same_hopf(M, N)
    op = _through_rho_operator(M, N)
    sol = el.solve_affine(op, el.vec(f))
    if sol is None:
        return None
    phi = el.unvec(sol, N.dim, M.dim)
    return cofree_map(phi, N, M.dim)


def through_rho_image(M: Comodule, N: Comodule):
    """Columns spanning ``{w∘ρ_M}`` in vec coordinates."""
    return el.column_space(_through_rho_operator(M, N))


# ---------------------------------------------------------------------------
# injectivity

@dataclass(frozen=True, eq=False)
class InjectivityResult:
    injective: bool
    retraction: object | None       # colinear (M⊗H, id⊗Δ) -> M with r∘ρ = id
    method: str

    def __bool__(self):
        return self.injective


def _averaged_retraction(M: Comodule, lam_right, lam_one):
    """``m⊗h ↦ m_0 Λ′(S(m_1)h)/Λ′(1)`` (a colinear retraction when Λ′(1) ≠ 0)."""
    h = M.hopf
    F, d, n = h.field, h.dim, M.dim
    pair = lam_right * h.mult * kron(h.antipode, h.identity())     # 1 x d^2: (a, b) ↦ Λ′(S(a)b)
    inv = F(1) / lam_one
    return kron(F.identity(n), pair) * kron(M.coaction, h.identity()) * inv


def is_injective(M: Comodule, integ=None) -> InjectivityResult:
    """Decide whether ``ρ: M -> (M⊗H, id⊗Δ)`` has a colinear retraction."""
    from .hopf import cofrobenius_data
    h = M.hopf
    F = h.field
    integ = integ or cofrobenius_data(h)
    lam_one = (integ.right * h.unit)[0, 0]
    free = cofree_on(M)
    In = F.identity(M.dim)
    if lam_one != 0:
        r = _averaged_retraction(M, integ.right, lam_one)
        if mat_equal(r * M.coaction, In) and is_colinear(r, free, M):
            return InjectivityResult(True, r, "averaging")
    r = factor_through_coaction(In, M, M)
    if r is None:
        return InjectivityResult(False, None, "linear system")
    return InjectivityResult(True, r, "linear system")
