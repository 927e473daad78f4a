"""
The pseudo-para-cyclic comodule ``T_n(A, M) = A^{⊗(n+1)}⊗M`` and its cyclic
coapproximation.

A is an algebra (usually a Hopf algebra) whose structure maps are H-colinear;
M carries a left A-action, a left A-coaction ``m ↦ m^{(-1)}⊗m^{(0)}`` and a
right H-coaction.  Elements ``[a_0|…|a_n]m`` are ordered as the tensor
product ``A⊗…⊗A⊗M`` with the frozen index convention; T_n carries the
diagonal right H-coaction.

    d_i [a_0|…|a_n]m = [a_0|…|a_i a_{i+1}|…|a_n]m            (i < n)
    d_n [a_0|…|a_n]m = [m^{(-1)} a_n a_0|a_1|…|a_{n-1}]m^{(0)}
    s_i [a_0|…|a_n]m = [a_0|…|a_i|1|a_{i+1}|…|a_n]m
    t_n [a_0|…|a_n]m = [m^{(-1)} a_n|a_0|…|a_{n-1}]m^{(0)}
    t_n⁻¹[a_0|…|a_n]m = [a_1|…|a_n|S⁻¹(m^{(-1)}) a_0]m^{(0)}

The inverse uses S⁻¹; it agrees with S whenever S² = id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import exactlin as el
from .amod import ComoduleAlgebra
from .comod import Comodule, check_same_hopf, is_colinear, subcomodule, tensor_diagonal, trivial_comodule
from .cyclic_cat import (CYCLIC_FAMILIES, PARA_FAMILIES, PSEUDO_PARA_FAMILIES, RelationReport,
                         check_relations, evaluate, relation_catalogue)
from .exactlin import Field, VectorSpace, kron, mat_equal, permute_factors
from .hopf import ValidationReport, antipode_failures, bialgebra_failures


DEFAULT_MAX_DEGREE = 4


@dataclass(frozen=True, eq=False)
class HopfBialgebraInComod:
    """An algebra in comodules with comultiplication, counit and optional antipode."""
    algebra: ComoduleAlgebra
    comult: object
    counit: object
    antipode: object | None = None

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def hopf(self):
        return self.algebra.hopf


def bialgebra_from_hopf(h, coaction_comodule: Comodule, name: str | None = None) -> HopfBialgebraInComod:
    """Wrap a Hopf algebra ``h`` whose underlying space carries the given H-coaction."""
    alg = ComoduleAlgebra(name or h.name, coaction_comodule, h.mult, h.unit)
    return HopfBialgebraInComod(alg, h.comult, h.counit, h.antipode)


def validate_bialgebra(B: HopfBialgebraInComod) -> ValidationReport:
    from .amod import validate_algebra
    rep = validate_algebra(B.algebra)
    if rep.shape_errors:
        return rep
    F, d = B.field, B.dim
    a = B.algebra
    for f in bialgebra_failures(F, d, a.mult, a.unit, B.comult, B.counit):
        if f not in ("associativity", "unitality"):
            rep.failures.append(f"bialgebra {B.name}: {f}")
    A = a.comodule
    AA = tensor_diagonal(A, A)
    k = trivial_comodule(a.hopf)
    if not is_colinear(B.comult, A, AA):
        rep.failures.append(f"bialgebra {B.name}: comultiplication not colinear")
    if not is_colinear(B.counit, A, k):
        rep.failures.append(f"bialgebra {B.name}: counit not colinear")
    if B.antipode is not None:
        rep.failures += [f"bialgebra {B.name}: {x}"
                         for x in antipode_failures(F, d, a.mult, a.unit, B.comult, B.counit, B.antipode)]
        if not is_colinear(B.antipode, A, A):
            rep.failures.append(f"bialgebra {B.name}: antipode not colinear")
        if el.rank(B.antipode) != d:
            rep.failures.append(f"bialgebra {B.name}: antipode not bijective")
    return rep


@dataclass(frozen=True, eq=False)
class StableModComod:
    """Coefficients: left A-action ``A⊗M -> M``, left A-coaction ``M -> A⊗M``, right H-coaction."""
    name: str
    algebra: ComoduleAlgebra
    comodule: Comodule
    action: object        # dM x dA*dM
    acoaction: object     # dA*dM x dM

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def field(self) -> Field:
        return self.comodule.field


def trivial_coefficients(a: ComoduleAlgebra, augmentation, name: str = "k") -> StableModComod:
    """k with action through ``augmentation`` and coaction ``1 ↦ 1⊗1``."""
    F = a.field
    k = trivial_comodule(a.hopf)
    return StableModComod(name, a, k, augmentation, a.unit)


def regular_coefficients(a: ComoduleAlgebra, name: str | None = None) -> StableModComod:
    """A acting on itself by multiplication, with the trivial A-coaction ``a ↦ 1⊗a``."""
    F = a.field
    return StableModComod(name or a.name, a, a.comodule, a.mult, kron(a.unit, F.identity(a.dim)))


def is_stable(M: StableModComod) -> bool:
    return mat_equal(M.action * M.acoaction, M.field.identity(M.dim))


def validate_coefficients(M: StableModComod, B: HopfBialgebraInComod | None = None) -> ValidationReport:
    rep = ValidationReport()
    a = M.algebra
    F = a.field
    dA, dM = a.dim, M.dim
    if el.shape(M.action) != (dM, dA * dM) or el.shape(M.acoaction) != (dA * dM, dM):
        rep.shape_errors.append(f"coefficients {M.name}: action/coaction shapes do not match")
        return rep
    IA, IM = F.identity(dA), F.identity(dM)
    act, co = M.action, M.acoaction
    if not mat_equal(act * kron(a.mult, IM), act * kron(IA, act)) or \
            not mat_equal(act * kron(a.unit, IM), IM):
        rep.failures.append(f"coefficients {M.name}: not an A-module")
    if B is not None:
        if not mat_equal(kron(B.comult, IM) * co, kron(IA, co) * co) or \
                not mat_equal(kron(B.counit, IM) * co, IM):
            rep.failures.append(f"coefficients {M.name}: not an A-comodule")
    if not is_stable(M):
        rep.failures.append(f"coefficients {M.name}: not stable (action∘coaction != id)")
    AM = tensor_diagonal(a.comodule, M.comodule)
    if not is_colinear(act, AM, M.comodule):
        rep.failures.append(f"coefficients {M.name}: action not H-colinear")
    if not is_colinear(co, M.comodule, AM):
        rep.failures.append(f"coefficients {M.name}: A-coaction not H-colinear")
    return rep


# ---------------------------------------------------------------------------
# the graded object

@dataclass(frozen=True, eq=False)
class ParaCyclicComodule:
    max_degree: int
    field: Field
    comodules: tuple                 # T_0..T_N
    faces: dict                      # (n, i) -> matrix
    degeneracies: dict               # (n, i) -> matrix, n < N
    t: dict                          # n -> matrix
    t_inv: dict | None = None
    tag: str = "pseudo_para"
    name: str = "T"

    def face(self, n, i):
        return self.faces[n, i]

    def degeneracy(self, n, i):
        return self.degeneracies[n, i]

    def cyclic(self, n):
        return self.t[n]

    def cyclic_inverse(self, n):
        return None if self.t_inv is None else self.t_inv[n]

    def dim(self, n):
        return self.comodules[n].dim

    def operators(self):
        """All (name, source degree, target degree, matrix)."""
        for (n, i), m in sorted(self.faces.items()):
            yield f"d{i}@{n}", n, n - 1, m
        for (n, i), m in sorted(self.degeneracies.items()):
            yield f"s{i}@{n}", n, n + 1, m
        for n, m in sorted(self.t.items()):
            yield f"t@{n}", n, n, m
        if self.t_inv:
            for n, m in sorted(self.t_inv.items()):
                yield f"t^-1@{n}", n, n, m


def build_T(A, M: StableModComod, N: int = 3, bound: int = DEFAULT_MAX_DEGREE,
            name: str | None = None) -> ParaCyclicComodule:
    """Operator matrices of ``T_n(A, M)`` for ``0 <= n <= N``."""
    if N > bound:
        raise ValueError(f"degree {N} exceeds the configured bound {bound}")
    a: ComoduleAlgebra = A.algebra if isinstance(A, HopfBialgebraInComod) else A
    check_same_hopf(a.comodule, M.comodule)
    F = a.field
    dA, dM = a.dim, M.dim
    m2 = a.mult
    m3 = a.mult * kron(a.mult, F.identity(dA))           # (x, y, z) ↦ xyz
    IM = F.identity(dM)
    comods = []
    cur = M.comodule
    for n in range(N + 1):
        cur = tensor_diagonal(a.comodule, cur) if n else tensor_diagonal(a.comodule, M.comodule)
        comods.append(cur.relabel(f"T{n}"))
    faces, degens, ts = {}, {}, {}
    for n in range(N + 1):
        r = n + 1                                       # number of A factors
        # spread the A-coaction: [a_0..a_n] m -> a_0..a_n ⊗ m^{(-1)} ⊗ m^{(0)}
        spread = kron(F.identity(dA ** r), M.acoaction)
        dims = [dA] * (r + 1) + [dM]                    # a_0..a_n, m^{-1}, m^0
        # t: (m^{-1}, a_n, a_0, ..., a_{n-1}, m^0), multiply the first two
        order_t = [r, n] + list(range(n)) + [r + 1]
        P = permute_factors(F, dims, order_t)
        ts[n] = kron(kron(m2, F.identity(dA ** n)), IM) * P * spread
        if n >= 1:
            for i in range(n):
                faces[n, i] = el.kron_all([F.identity(dA ** i), m2, F.identity(dA ** (n - i - 1)), IM])
            order_d = [r, n, 0] + list(range(1, n)) + [r + 1]
            P = permute_factors(F, dims, order_d)
            faces[n, n] = kron(kron(m3, F.identity(dA ** (n - 1))), IM) * P * spread
        if n < N:
            for i in range(n + 1):
                degens[n, i] = el.kron_all([F.identity(dA ** (i + 1)), a.unit,
                                            F.identity(dA ** (n - i)), IM])
    return ParaCyclicComodule(N, F, tuple(comods), faces, degens, ts, None, "pseudo_para",
                              name or f"T({a.name},{M.name})")


def inverse_cyclic_operators(B: HopfBialgebraInComod, M: StableModComod, N: int) -> dict:
    """``t_n⁻¹`` from the closed formula with ``S⁻¹``."""
    if B.antipode is None:
        raise ValueError(f"{B.name} has no antipode")
    F = B.field
    dA, dM = B.dim, M.dim
    if el.rank(B.antipode) != dA:
        raise ValueError("antipode is not bijective")
    Sinv = el.inverse(B.antipode)
    a = B.algebra
    IM = F.identity(dM)
    out = {}
    for n in range(N + 1):
        r = n + 1
        spread = kron(F.identity(dA ** r), M.acoaction)
        dims = [dA] * (r + 1) + [dM]
        # (a_1, ..., a_n, m^{-1}, a_0, m^0); then S⁻¹ on m^{-1} and multiply it with a_0
        order = list(range(1, r)) + [r, 0, r + 1]
        P = permute_factors(F, dims, order)
        last = a.mult * kron(Sinv, F.identity(dA))
        out[n] = el.kron_all([F.identity(dA ** n), last, IM]) * P * spread
    return out


# ---------------------------------------------------------------------------
# verification

@dataclass
class CyclicReport:
    relations: RelationReport
    colinear: dict                   # operator name -> bool
    pseudo_para: bool
    para: bool
    cyclic: bool

    def failed_names(self) -> list[str]:
        return [f"{r.name}@{r.degree} [{r.family}]" for r in self.relations.failed]


def verify_pseudo_para_cyclic(T: ParaCyclicComodule) -> CyclicReport:
    rels = relation_catalogue(T.max_degree, with_inverse=T.t_inv is not None, with_order=True)
    rep = check_relations(T, rels)
    col = {}
    for name, src, tgt, m in T.operators():
        col[name] = is_colinear(m, T.comodules[src], T.comodules[tgt])
    return CyclicReport(rep, col, rep.families_hold(PSEUDO_PARA_FAMILIES),
                        rep.families_hold(PARA_FAMILIES), rep.families_hold(CYCLIC_FAMILIES))


def defect(T: ParaCyclicComodule, family: str, n: int | None = None) -> list:
    """Defect matrices (lhs − rhs) of the relations in ``family``."""
    out = []
    for r in relation_catalogue(T.max_degree, with_inverse=T.t_inv is not None):
        if r.family == family and (n is None or r.degree == n):
            out.append((r, evaluate(r.lhs, T) - evaluate(r.rhs, T)))
    return out


@dataclass
class CyclicUpgrade:
    upgraded: ParaCyclicComodule | None
    stable: bool
    inverse_ok: bool                 # t∘t⁻¹ = t⁻¹∘t = id in every degree
    order_ok: bool                   # t^{n+1} = id in every degree
    failures: list

    @property
    def ok(self) -> bool:
        return self.upgraded is not None


def cyclic_structure(T: ParaCyclicComodule, B: HopfBialgebraInComod, M: StableModComod) -> CyclicUpgrade:
    """Attach ``t⁻¹`` and certify ``t t⁻¹ = id`` and ``t^{n+1} = id``; refuse otherwise."""
    fails = []
    if B.antipode is None:
        raise ValueError(f"{B.name} has no antipode")
    F = T.field
    stable = is_stable(M)
    if not stable:
        fails.append("coefficients not stable: action∘coaction != id")
    if not is_colinear(B.antipode, B.algebra.comodule, B.algebra.comodule):
        fails.append("antipode not H-colinear")
    tinv = inverse_cyclic_operators(B, M, T.max_degree)
    inv_ok = True
    order_ok = True
    for n in range(T.max_degree + 1):
        I = F.identity(T.dim(n))
        if not (mat_equal(T.t[n] * tinv[n], I) and mat_equal(tinv[n] * T.t[n], I)):
            inv_ok = False
            fails.append(f"t t^-1 != id in degree {n}")
        if not mat_equal(el.mat_power(T.t[n], n + 1), I):
            order_ok = False
            fails.append(f"t^{n + 1} != id in degree {n}")
    if fails:
        return CyclicUpgrade(None, stable, inv_ok, order_ok, fails)
    up = ParaCyclicComodule(T.max_degree, F, T.comodules, T.faces, T.degeneracies, T.t, tinv,
                            "cyclic", T.name)
    rep = verify_pseudo_para_cyclic(up)
    if not rep.cyclic:
        return CyclicUpgrade(None, stable, inv_ok, order_ok, rep.failed_names())
    return CyclicUpgrade(up, stable, inv_ok, order_ok, [])


# ---------------------------------------------------------------------------
# coapproximation

def _left_annihilator(W, n: int, F: Field):
    """Rows L with ``L W = 0`` and ``rank L = n − rank W``."""
    if W.ncols() == 0:
        return F.identity(n)
    K = el.nullspace(W.transpose())
    return K.transpose()


@dataclass
class Coapproximation:
    Q: ParaCyclicComodule
    inclusions: dict            # n -> columns spanning Q_n inside T_n
    sweeps: int
    provisional_top: bool       # the top degree lacks the s-closure constraint

    def dims(self) -> list[int]:
        return [self.inclusions[n].ncols() for n in sorted(self.inclusions)]


def cyclic_defect_kernels(T: ParaCyclicComodule) -> dict:
    """Per degree, the common kernel of every cyclic-relation defect with that source degree."""
    F = T.field
    rels = relation_catalogue(T.max_degree, with_inverse=False, with_order=True)
    by_deg: dict[int, list] = {}
    for r in rels:
        if r.family in CYCLIC_FAMILIES:
            by_deg.setdefault(r.degree, []).append(evaluate(r.lhs, T) - evaluate(r.rhs, T))
    out = {}
    for n in range(T.max_degree + 1):
        mats = by_deg.get(n, [])
        if mats:
            out[n] = el.nullspace(el.vstack(F, mats))
        else:
            out[n] = F.identity(T.dim(n))
    return out


def coapproximation(T: ParaCyclicComodule) -> Coapproximation:
    """Largest operator-closed graded subspace on which every cyclic identity holds.

    Greatest fixed point of ``W_n ← {v ∈ W_n : t v ∈ W_n, d_i v ∈ W_{n-1},
    s_i v ∈ W_{n+1} (n < N)}`` started from the common kernel of the relation
    defects; sweeps run degree-descending until nothing shrinks.
    """
    F = T.field
    N = T.max_degree
    W = cyclic_defect_kernels(T)
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for n in range(N, -1, -1):
            Wn = W[n]
            if Wn.ncols() == 0:
                continue
            rows = []
            L_same = _left_annihilator(W[n], T.dim(n), F)
            rows.append(L_same * T.t[n] * Wn)
            if n >= 1:
                L = _left_annihilator(W[n - 1], T.dim(n - 1), F)
                for i in range(n + 1):
                    rows.append(L * T.faces[n, i] * Wn)
            if n < N:
                L = _left_annihilator(W[n + 1], T.dim(n + 1), F)
                for i in range(n + 1):
                    rows.append(L * T.degeneracies[n, i] * Wn)
            rows = [r for r in rows if r.nrows() > 0]
            if not rows:
                continue
            K = el.nullspace(el.vstack(F, rows))
            if K.ncols() < Wn.ncols():
                W[n] = el.column_space(Wn * K) if K.ncols() else F.zeros(T.dim(n), 0)
                changed = True
    Q = restrict(T, W, name=f"Q{T.name}")
    return Coapproximation(Q, W, sweeps, provisional_top=True)


def restrict(T: ParaCyclicComodule, W: dict, name: str = "Q") -> ParaCyclicComodule:
    """Operators of T restricted to an operator-closed family of subspaces."""
    F = T.field
    comods, faces, degens, ts, tinv = [], {}, {}, {}, {}
    for n in range(T.max_degree + 1):
        sub, _ = subcomodule(T.comodules[n], W[n], f"{name}{n}")
        comods.append(sub)

    def res(mat, src, tgt):
        if W[src].ncols() == 0:
            return F.zeros(W[tgt].ncols(), 0)
        if W[tgt].ncols() == 0:
            return F.zeros(0, W[src].ncols())
        out = el.solve_affine(W[tgt], mat * W[src])
        if out is None:
            raise ValueError("family is not closed under the operators")
        return out

    for (n, i), m in T.faces.items():
        faces[n, i] = res(m, n, n - 1)
    for (n, i), m in T.degeneracies.items():
        degens[n, i] = res(m, n, n + 1)
    for n, m in T.t.items():
        ts[n] = res(m, n, n)
    for n in range(T.max_degree + 1):
        if W[n].ncols() == 0:
            tinv[n] = F.zeros(0, 0)
        else:
            tinv[n] = el.inverse(ts[n]) if el.rank(ts[n]) == ts[n].nrows() else None
    if any(v is None for v in tinv.values()):
        tinv = None
    return ParaCyclicComodule(T.max_degree, F, tuple(comods), faces, degens, ts, tinv, "cyclic", name)


def is_subfamily_closed(T: ParaCyclicComodule, W: dict) -> bool:
    """Whether the column spans ``W[n]`` are stable under every d, s and t."""
    for name, src, tgt, m in T.operators():
        if name.startswith("t^-1") or W[src].ncols() == 0:
            continue
        img = m * W[src]
        if W[tgt].ncols() == 0:
            if not el.is_zero(img):
                return False
        elif not el.in_column_space(W[tgt], img):
            return False
    return True


# ---------------------------------------------------------------------------
# brute-force oracle over a small prime field

def brute_force_coapproximation(T: ParaCyclicComodule) -> dict:
    """Set of all vectors whose operator closure satisfies every cyclic identity.

    Exhaustive over ``F_p`` (feasible only for tiny instances): for each
    vector the closure under all operators is generated, and the vector is
    accepted when every relation defect vanishes on that closure.  Returns,
    per degree, the set of accepted vectors as tuples of residues.
    """
    F = T.field
    if F.is_rational:
        raise ValueError("brute force needs a finite field")
    p = F.p
    N = T.max_degree
    rels = [r for r in relation_catalogue(N, with_order=True) if r.family in CYCLIC_FAMILIES]
    defects: dict[int, list] = {}
    for r in rels:
        defects.setdefault(r.degree, []).append(evaluate(r.lhs, T) - evaluate(r.rhs, T))
    ops: dict[int, list] = {}
    for name, src, tgt, m in T.operators():
        if not name.startswith("t^-1"):
            ops.setdefault(src, []).append((tgt, m))

    def closure(n, v):
        spans = {k: F.zeros(T.dim(k), 0) for k in range(N + 1)}
        queue = [(n, v)]
        while queue:
            k, x = queue.pop()
            if el.is_zero(x):
                continue
            S = spans[k]
            if S.ncols() and el.in_column_space(S, x):
                continue
            spans[k] = el.hstack(F, [S, x]) if S.ncols() else x
            for tgt, m in ops.get(k, []):
                queue.append((tgt, m * x))
        return spans

    good: dict[int, set] = {}
    for n in range(N + 1):
        dim = T.dim(n)
        good[n] = set()
        for coords in itertools.product(range(p), repeat=dim):
            v = F.vector(list(coords))
            spans = closure(n, v)
            ok = True
            for k, S in spans.items():
                if S.ncols() == 0:
                    continue
                for D in defects.get(k, []):
                    if not el.is_zero(D * S):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                good[n].add(tuple(int(c) for c in coords))
    return good


def span_as_set(W, p: int) -> set:
    """All vectors (as residue tuples) in the column span of W over F_p."""
    dim = W.nrows()
    k = W.ncols()
    cols = [[int(W[i, j]) for i in range(dim)] for j in range(k)]
    out = set()
    for coeffs in itertools.product(range(p), repeat=k):
        v = [0] * dim
        for c, col in zip(coeffs, cols):
            if c:
                for i in range(dim):
                    v[i] = (v[i] + c * col[i]) % p
        out.add(tuple(v))
    return out


# ---------------------------------------------------------------------------
# characteristic map

@dataclass
class CharacteristicMap:
    source: Coapproximation           # Q(A, k)
    target: Coapproximation           # Q(A, A)
    on_T: dict                        # n -> matrix T_n(A,k) -> T_n(A,A)
    on_Q: dict                        # n -> matrix Q_n(A,k) -> Q_n(A,A)
    commutes_T: bool
    commutes_Q: bool
    colinear: bool
    coinvariant_source: dict          # n -> columns of Q_n(A,k)^{coH} in Q coordinates
    coinvariant_target: dict
    on_coinvariants: dict             # n -> restricted matrix
    commutes_coinvariants: bool


def _commutes(maps: dict, X, Y) -> bool:
    for name, src, tgt, m in X.operators():
        if name.startswith("t^-1"):
            continue
        other = {nm: mm for nm, s, t, mm in Y.operators()}[name]
        if not mat_equal(maps[tgt] * m, other * maps[src]):
            return False
    return True


def coinvariant_columns(C: Comodule):
    """Basis (columns) of ``{v : ρ(v) = v⊗1}``."""
    h = C.hopf
    F = C.field
    return el.nullspace(C.coaction - kron(F.identity(C.dim), h.unit))


def characteristic_map(B, N: int = 2, augmentation=None) -> CharacteristicMap:
    """``Q(A, k) -> Q(A, A)`` induced by the unit ``k -> A``.

    k carries the action through ``augmentation`` (the counit when B is a
    bialgebra) and the coaction ``1 ↦ 1⊗1``; A carries multiplication and the
    trivial A-coaction.
    """
    a = B.algebra if isinstance(B, HopfBialgebraInComod) else B
    F = a.field
    if augmentation is None:
        if not isinstance(B, HopfBialgebraInComod):
            raise ValueError("an augmentation is needed for a plain algebra")
        augmentation = B.counit
    k = trivial_coefficients(a, augmentation)
    coeffA = regular_coefficients(a)
    if not is_colinear(a.unit, k.comodule, a.comodule):
        raise ValueError("unit is not colinear")
    Tk = build_T(a, k, N)
    TA = build_T(a, coeffA, N)
    on_T = {n: kron(F.identity(a.dim ** (n + 1)), a.unit) for n in range(N + 1)}
    commutes_T = _commutes(on_T, Tk, TA)
    colin = all(is_colinear(on_T[n], Tk.comodules[n], TA.comodules[n]) for n in range(N + 1))
    Qk, QA = coapproximation(Tk), coapproximation(TA)
    on_Q = {}
    for n in range(N + 1):
        src, tgt = Qk.inclusions[n], QA.inclusions[n]
        if src.ncols() == 0:
            on_Q[n] = F.zeros(tgt.ncols(), 0)
            continue
        sol = el.solve_affine(tgt, on_T[n] * src) if tgt.ncols() else None
        if sol is None:
            raise RuntimeError(f"image of Q_{n}(A,k) is not inside Q_{n}(A,A)")
        on_Q[n] = sol
    commutes_Q = _commutes(on_Q, Qk.Q, QA.Q)
    cs, ct, on_c = {}, {}, {}
    for n in range(N + 1):
        cs[n] = coinvariant_columns(Qk.Q.comodules[n])
        ct[n] = coinvariant_columns(QA.Q.comodules[n])
    Ck = restrict(Qk.Q, cs, "Qk^coH")
    CA = restrict(QA.Q, ct, "QA^coH")
    for n in range(N + 1):
        if cs[n].ncols() == 0:
            on_c[n] = F.zeros(ct[n].ncols(), 0)
            continue
        sol = el.solve_affine(ct[n], on_Q[n] * cs[n])
        if sol is None:
            raise RuntimeError("coinvariants not preserved")
        on_c[n] = sol
    commutes_c = _commutes(on_c, Ck, CA)
    return CharacteristicMap(Qk, QA, on_T, on_Q, commutes_T, commutes_Q, colin, cs, ct, on_c, commutes_c)


# ---------------------------------------------------------------------------
# Hopf-module coefficients

@dataclass
class VanishingVerdict:
    applicable: bool
    injective: list             # per degree
    stable_quotients: list      # per degree, dim of the stable endomorphism space
    reason: str = ""

    @property
    def vanishes(self) -> bool:
        return self.applicable and all(self.injective) and not any(self.stable_quotients)


def hopf_module_vanishing_check(T: ParaCyclicComodule, M: Comodule, h_action) -> VanishingVerdict:
    """Check that every ``T_n`` is injective when M is an (H, H)-Hopf module.

    ``h_action``: ``dim M x (dim H * dim M)`` left H-action on M; M must be
    an H-module object in H-comodules (``ρ(h·m) = h_1 m_0 ⊗ h_2 m_1``).
    """
    from .amod import AModObject, algebra_from_hopf, validate_module
    from .comod import is_injective
    from .stable import stable_hom
    h = M.hopf
    alg = algebra_from_hopf(h)
    rep = validate_module(AModObject(M.name, alg, M, h_action))
    if not rep.ok:
        return VanishingVerdict(False, [], [], "; ".join(rep.failures + rep.shape_errors))
    inj, quots = [], []
    for C in T.comodules:
        inj.append(is_injective(C).injective)
        quots.append(stable_hom(C, C).quotient_dim)
    return VanishingVerdict(True, inj, quots)


# ---------------------------------------------------------------------------
# fixtures

def graded_comodule(h, grades, name: str, labels=None) -> Comodule:
    """Comodule with ``ρ(v_i) = v_i⊗g_i`` for grouplike labels ``grades[i]``."""
    F, d = h.field, h.dim
    n = len(grades)
    data = {(i * d + h.index(g), i): 1 for i, g in enumerate(grades)}
    return Comodule(name, h, VectorSpace(n, tuple(labels or (f"v{i}" for i in range(n)))),
                    F.from_sparse(n * d, n, data))


def trivially_coacting(A, h, name: str | None = None) -> HopfBialgebraInComod:
    """Hopf algebra A viewed in H-comodules with the trivial coaction."""
    F = h.field
    C = Comodule(name or A.name, h, VectorSpace(A.dim, tuple(A.labels)),
                 kron(F.identity(A.dim), h.unit))
    return bialgebra_from_hopf(A, C, name)


def grouplike_coefficients(B: HopfBialgebraInComod, label: str, character=None,
                           name: str | None = None) -> StableModComod:
    """k with A-coaction ``1 ↦ g⊗1`` and action through ``character`` (default: counit)."""
    a = B.algebra
    F = a.field
    g = F.unit_vector(a.dim, a.comodule.space.labels.index(label))
    chi = B.counit if character is None else character
    return StableModComod(name or f"k_{label}", a, trivial_comodule(a.hopf), chi, g)


def cyclic_bar_fixture(F: Field | None = None, n: int = 2):
    """A = M = kC_n with trivial H-coaction (H = kC_n); T is the cyclic bar construction."""
    from .hopf import group_algebra
    from .exactlin import QQ
    h = group_algebra(n, F or QQ)
    B = trivially_coacting(h, h)
    return B, regular_coefficients(B.algebra)


def super_sweedler_fixture():
    """Sweedler's algebra graded by parity over H = QC2 (g even, x odd); M = k, ``1 ↦ g⊗1``."""
    from .hopf import group_algebra, sweedler
    from .exactlin import QQ
    h = group_algebra(2, QQ)
    S = sweedler(QQ)
    C = graded_comodule(h, ["e", "e", "g", "g"], "sweedler", S.labels)
    B = bialgebra_from_hopf(S, C)
    return B, grouplike_coefficients(B, "g")


def twisted_group_fixture(F: Field | None = None):
    """A = QC2 (trivial H-coaction), M = k with ``1 ↦ g⊗1`` and counit action: stable, t^{n+1} ≠ id."""
    from .hopf import group_algebra
    from .exactlin import QQ
    h = group_algebra(2, F or QQ)
    B = trivially_coacting(h, h)
    return B, grouplike_coefficients(B, "g")


def sign_character_fixture():
    """As :func:`twisted_group_fixture` but acting through ``χ(g) = −1``: not stable."""
    B, _ = twisted_group_fixture()
    F = B.field
    chi = F.from_rows([[1, -1]])
    return B, grouplike_coefficients(B, "g", chi, "k_sign")


def mixed_grouplike_fixture(F: Field | None = None):
    """A = kC2 (trivial H-coaction), M = k² with ``u0 ↦ 1⊗u0``, ``u1 ↦ g⊗u1``, counit action.

    T splits as the cyclic bar part (cyclic) plus the twisted part, so the
    coapproximation is a proper nonzero subobject.
    """
    B, _ = twisted_group_fixture(F)
    a = B.algebra
    Fd = a.field
    co = Fd.from_sparse(2 * a.dim, 2, {(0 * 2 + 0, 0): 1, (1 * 2 + 1, 1): 1})
    act = kron(B.counit, Fd.identity(2))
    return B, StableModComod("k+k_g", a, trivial_comodule(a.hopf, 2), act, co)
