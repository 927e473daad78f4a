"""
H-comodule algebras and their module objects in comodules.

An :class:`AModObject` is a comodule M with an action ``A⊗M -> M`` that is
colinear for the diagonal coaction on ``A⊗M``.  Actions are stored as
``dim M x (dim A * dim M)`` matrices; ``mults(a)`` gives the left
multiplication by the basis element ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import exactlin as el
from .comod import (ColinearMap, Comodule, check_same_hopf, hom_colinear, is_colinear,
                    is_injective, regular_comodule, same_span, tensor_diagonal, trivial_comodule)
from .exactlin import Field, VectorSpace, kron, mat_equal
from .hopf import HopfAlgebra, IntegralData, ValidationReport, cofrobenius_data
from .stable import (CylinderData, action_to_mults, mapping_cylinder, mults_to_action)


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    name: str
    comodule: Comodule
    mult: object     # dA x dA^2
    unit: object     # dA x 1

    @property
    def hopf(self) -> HopfAlgebra:
        return self.comodule.hopf

    @property
    def field(self) -> Field:
        return self.comodule.field

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @cached_property
    def left_mults(self) -> list:
        return action_to_mults(self.mult, self.dim, self.dim)


@dataclass(frozen=True, eq=False)
class AModObject:
    name: str
    algebra: ComoduleAlgebra
    comodule: Comodule
    action: object   # dM x (dA * dM)

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def field(self) -> Field:
        return self.comodule.field

    @cached_property
    def mults(self) -> list:
        return action_to_mults(self.action, self.algebra.dim, self.dim)


# ---------------------------------------------------------------------------
# constructors

def algebra_from_hopf(h: HopfAlgebra, name: str | None = None) -> ComoduleAlgebra:
    """H as a comodule algebra over itself (coaction Δ)."""
    return ComoduleAlgebra(name or h.name, regular_comodule(h), h.mult, h.unit)


def ground_algebra(h: HopfAlgebra, name: str = "k") -> ComoduleAlgebra:
    F = h.field
    return ComoduleAlgebra(name, trivial_comodule(h), F.identity(1), F.identity(1))


def regular_module(a: ComoduleAlgebra, name: str | None = None) -> AModObject:
    return AModObject(name or a.name, a, a.comodule, a.mult)


def trivial_module(a: ComoduleAlgebra, m: Comodule, augmentation, name: str | None = None) -> AModObject:
    """M with ``a·m = χ(a)m`` for an algebra map ``χ: A -> k`` (``1 x dA`` row)."""
    F = a.field
    return AModObject(name or m.name, a, m, kron(augmentation, F.identity(m.dim)))


def free_amodule(a: ComoduleAlgebra, v: Comodule, name: str | None = None) -> AModObject:
    """``A⊗V`` with action on the left factor and the diagonal coaction."""
    F = a.field
    com = tensor_diagonal(a.comodule, v, name or f"{a.name}⊗{v.name}")
    return AModObject(com.name, a, com, kron(a.mult, F.identity(v.dim)))


# ---------------------------------------------------------------------------
# validation

def validate_algebra(a: ComoduleAlgebra) -> ValidationReport:
    from .comod import validate_comodule
    rep = ValidationReport()
    F, d = a.field, a.dim
    if el.shape(a.mult) != (d, d * d) or el.shape(a.unit) != (d, 1):
        rep.shape_errors.append(f"algebra {a.name}: table shapes do not match dimension {d}")
        return rep
    crep = validate_comodule(a.comodule)
    rep.shape_errors += crep.shape_errors
    rep.failures += [f"algebra {a.name}: {x}" for x in crep.failures]
    if rep.shape_errors:
        return rep
    I = F.identity(d)
    m, u = a.mult, a.unit
    if not mat_equal(m * kron(m, I), m * kron(I, m)):
        rep.failures.append(f"algebra {a.name}: associativity")
    if not (mat_equal(m * kron(u, I), I) and mat_equal(m * kron(I, u), I)):
        rep.failures.append(f"algebra {a.name}: unitality")
    AA = tensor_diagonal(a.comodule, a.comodule)
    if not is_colinear(m, AA, a.comodule):
        rep.failures.append(f"algebra {a.name}: multiplication not colinear")
    if not is_colinear(u, trivial_comodule(a.hopf), a.comodule):
        rep.failures.append(f"algebra {a.name}: unit not colinear")
    return rep


def validate_module(m: AModObject) -> ValidationReport:
    from .comod import validate_comodule
    rep = ValidationReport()
    a = m.algebra
    F = a.field
    dA, dM = a.dim, m.dim
    if el.shape(m.action) != (dM, dA * dM):
        rep.shape_errors.append(f"module {m.name}: action shape {el.shape(m.action)} != {(dM, dA * dM)}")
        return rep
    crep = validate_comodule(m.comodule)
    rep.shape_errors += crep.shape_errors
    rep.failures += [f"module {m.name}: {x}" for x in crep.failures]
    if rep.shape_errors:
        return rep
    act = m.action
    IA, IM = F.identity(dA), F.identity(dM)
    if not mat_equal(act * kron(a.mult, IM), act * kron(IA, act)):
        rep.failures.append(f"module {m.name}: associativity")
    if not mat_equal(act * kron(a.unit, IM), IM):
        rep.failures.append(f"module {m.name}: unitality")
    AM = tensor_diagonal(a.comodule, m.comodule)
    if not is_colinear(act, AM, m.comodule):
        rep.failures.append(f"module {m.name}: action not colinear")
    return rep


def validate_algebra_and_module(a: ComoduleAlgebra, m: AModObject | None = None) -> ValidationReport:
    rep = validate_algebra(a)
    if m is not None and not rep.shape_errors:
        if m.algebra is not a:
            check_same_hopf(a.comodule, m.comodule)
        mr = validate_module(m)
        rep.failures += mr.failures
        rep.shape_errors += mr.shape_errors
    return rep


# ---------------------------------------------------------------------------
# hom spaces

def _alinear_system(M: AModObject, N: AModObject):
    F = M.field
    blocks = [kron(x.transpose(), F.identity(N.dim)) - kron(F.identity(M.dim), y)
              for x, y in zip(M.mults, N.mults)]
    return el.vstack(F, blocks)


def hom_A(M: AModObject, N: AModObject) -> list:
    K = el.nullspace(_alinear_system(M, N))
    return [el.unvec(el.submatrix(K, None, [j]), N.dim, M.dim) for j in range(K.ncols())]


def hom_A_colinear(M: AModObject, N: AModObject) -> list:
    from .comod import _hom_system
    F = M.field
    K = el.nullspace(el.vstack(F, [_alinear_system(M, N), _hom_system(M.comodule, N.comodule)]))
    return [el.unvec(el.submatrix(K, None, [j]), N.dim, M.dim) for j in range(K.ncols())]


def is_A_linear(f, M: AModObject, N: AModObject) -> bool:
    return all(mat_equal(f * x, y * f) for x, y in zip(M.mults, N.mults))


def hstar_on_hom(Mc: Comodule, Nc: Comodule) -> list:
    """Matrices (on column-major vec of ``Hom_k(M, N)``) of the dual-basis action

    ``(x·f)(m) = x(f(m_0)_1 S(m_1)) f(m_0)_0``.
    """
    h = Mc.hopf
    F, d = h.field, h.dim
    n = Nc.dim
    pair = h.mult * kron(h.identity(), h.antipode)            # (h, h') ↦ h S(h')
    mats = []
    for xi in range(d):
        x = F.unit_vector(d, xi).transpose()
        px = kron(F.identity(n), x * pair) * kron(Nc.coaction, h.identity())   # N⊗H -> N
        total = F.zeros(n * Mc.dim, n * Mc.dim)
        for i in range(d):
            e_i = F.unit_vector(d, i)
            Q = px * kron(F.identity(n), e_i)                 # n ↦ P_x(n⊗h_i)
            total = total + kron(Mc.act[i].transpose(), Q)
        mats.append(total)
    return mats


@dataclass(frozen=True, eq=False)
class HStarActionOnHomA:
    basis: list              # basis of Hom_A(M, N) (matrices)
    action_on_hom_k: list    # per dual basis vector, action on vec Hom_k(M, N)
    stable: bool             # Hom_A is closed under the action
    restricted: list | None  # per dual basis vector, matrix on the Hom_A basis (when stable)
    invariants: list         # basis of {f in Hom_A : x·f = x(1) f}

    def act(self, x):
        """Action of the functional ``x`` (``1 x d`` row) on vec Hom_k."""
        F = el.field_of(self.action_on_hom_k[0])
        r = self.action_on_hom_k[0].nrows()
        out = F.zeros(r, r)
        for i, v in enumerate(x.tolist()[0]):
            if v != 0:
                out = out + self.action_on_hom_k[i] * v
        return out


def homA_with_action(M: AModObject, N: AModObject) -> HStarActionOnHomA:
    check_same_hopf(M.comodule, N.comodule)
    F = M.field
    h = M.comodule.hopf
    basis = hom_A(M, N)
    acts = hstar_on_hom(M.comodule, N.comodule)
    B = el.hstack(F, [el.vec(f) for f in basis]) if basis else F.zeros(M.dim * N.dim, 0)
    restricted = []
    stable = True
    for T in acts:
        if not basis:
            restricted.append(F.zeros(0, 0))
            continue
        c = el.solve_affine(B, T * B)
        if c is None:
            stable = False
            break
        restricted.append(c)
    # invariants inside Hom_A: T_i f = h_i*(1) f for all i
    unit = [h.unit[i, 0] for i in range(h.dim)]
    if basis:
        eqs = el.vstack(F, [(T - F.identity(T.nrows()) * unit[i]) * B for i, T in enumerate(acts)])
        K = el.nullspace(eqs)
        inv = [el.unvec(B * el.submatrix(K, None, [j]), N.dim, M.dim) for j in range(K.ncols())]
    else:
        inv = []
    return HStarActionOnHomA(basis, acts, stable, restricted if stable else None, inv)


# ---------------------------------------------------------------------------
# total integrals

def total_integral(a: ComoduleAlgebra):
    """A colinear ``φ: H -> A`` with ``φ(1) = 1``, or ``None``."""
    h = a.hopf
    F = a.field
    basis = hom_colinear(regular_comodule(h), a.comodule)
    if not basis:
        return None
    A = el.hstack(F, [B * h.unit for B in basis])
    c = el.solve_affine(A, a.unit)
    if c is None:
        return None
    phi = F.zeros(a.dim, h.dim)
    for j, B in enumerate(basis):
        if c[j, 0] != 0:
            phi = phi + B * c[j, 0]
    return phi


# ---------------------------------------------------------------------------
# bar stages

def bar_face(a: ComoduleAlgebra, p: int, i: int):
    """``d_i: A^{⊗p} -> A^{⊗(p-1)}``, multiplying factors i and i+1."""
    F, d = a.field, a.dim
    return el.kron_all([F.identity(d ** i), a.mult, F.identity(d ** (p - i - 2))]) if p - i - 2 >= 0 else None


def bar_differential(a: ComoduleAlgebra, n: int):
    """``δ_n: A^{⊗(n+2)} -> A^{⊗(n+1)}``, the alternating sum of the faces ``d_0..d_n``."""
    F, d = a.field, a.dim
    out = F.zeros(d ** (n + 1), d ** (n + 2))
    for i in range(n + 1):
        di = bar_face(a, n + 2, i)
        out = out + (di if i % 2 == 0 else -di)
    return out


@dataclass(frozen=True, eq=False)
class BarStage:
    n: int
    stage: AModObject                  # C_n
    source: AModObject                 # X_n = A^{n+2} ⊗ (H/k1)^n
    delta_bar: object                  # X_n -> C_{n-1}
    cylinder: CylinderData
    filtration: list                   # inclusion matrices F^p -> C_n, p = 0..n+1
    subquotient_dims: list
    expected_dims: list
    split_witnesses: list              # A-linear retractions of F^{p-1} ⊂ F^p
    complex_ok: bool                   # δ̄_n∘(δ_{n+1}⊗id) = 0
    split_ok: bool


def _hbar(h: HopfAlgebra):
    """``H/k1`` as a quotient comodule of the regular comodule."""
    from .comod import quotient_comodule
    return quotient_comodule(regular_comodule(h), h.unit, "H/k1")


def _source_module(a: ComoduleAlgebra, n: int, hbar: Comodule) -> AModObject:
    """``X_n = A^{⊗(n+2)}⊗(H/k1)^{⊗n}`` with action on the first factor."""
    F = a.field
    com = a.comodule
    for _ in range(n + 1):
        com = tensor_diagonal(com, a.comodule)
    for _ in range(n):
        com = tensor_diagonal(com, hbar)
    rest = com.dim // a.dim
    return AModObject(f"X{n}", a, com.relabel(f"X{n}"), kron(a.mult, F.identity(rest)))


def bar_stages(a: ComoduleAlgebra, n_max: int = 3, integ: IntegralData | None = None,
               truncation: int = 3) -> list[BarStage]:
    """Stages ``C_0..C_{n_max}`` of the truncated cofibrant replacement of A.

    ``C_{-1} = A``; ``C_n`` is the mapping cylinder of ``δ̄_n: X_n -> C_{n-1}``
    with ``δ̄_0 = δ_0`` and ``δ̄_n(a⊗u⊗[h]) = ι_{n-1}(δ_n(a)⊗u⊗h)``, where
    ``ι_{n-1}: X_{n-1}⊗H -> C_{n-1}`` is the cylinder's map from the free part.
    """
    if n_max > truncation:
        raise ValueError(f"bar stage {n_max} exceeds the truncation {truncation}")
    h = a.hopf
    F, d, dA = a.field, h.dim, a.dim
    integ = integ or cofrobenius_data(h)
    hbar, hb_proj, hb_sec = _hbar(h)
    prev = regular_module(a, "C-1")
    prev_from_free = None
    stages = []
    # inclusions of F^p into the current stage; F^0 = A
    filt = [F.identity(dA)]
    retractions: list = []
    for n in range(n_max + 1):
        X = _source_module(a, n, hbar)
        if n == 0:
            dbar = bar_differential(a, 0)
        else:
            # X_n = (A^{n+2} ⊗ Hbar^{n-1}) ⊗ Hbar; lift the last factor with the section
            lift = kron(kron(bar_differential(a, n), F.identity((d - 1) ** (n - 1))), hb_sec)
            dbar = prev_from_free * lift
        f = ColinearMap(X.comodule, prev.comodule, dbar)
        if not is_colinear(dbar, X.comodule, prev.comodule):
            raise RuntimeError(f"δ̄_{n} is not colinear")
        if not is_A_linear(dbar, X, prev):
            raise RuntimeError(f"δ̄_{n} is not A-linear")
        cyl = mapping_cylinder(f, integ, actions=(X.action, prev.action, dA), name=f"C{n}")
        Cn = AModObject(f"C{n}", a, cyl.cylinder, cyl.action)
        # δ̄_n∘(δ_{n+1}⊗id) = 0
        if n == 0:
            complex_ok = el.is_zero(dbar * bar_differential(a, 1))
        else:
            complex_ok = el.is_zero(dbar * kron(bar_differential(a, n + 1),
                                                F.identity((d - 1) ** n)))
        filt = [cyl.incl * x for x in filt] + [F.identity(Cn.dim)]
        retractions = retractions + [cyl.retraction]
        sub_dims = [filt[0].ncols()] + [filt[p].ncols() - filt[p - 1].ncols() for p in range(1, len(filt))]
        expected = [dA ** (p + 1) * (d - 1) ** p for p in range(len(filt))]
        split_ok = True
        # F^{p-1} ⊂ F^p is the cylinder inclusion of stage p-1; its retraction is A-linear
        for p, rt in enumerate(retractions):
            src = stages[p].stage if p < len(stages) else Cn
            tgt = stages[p - 1].stage if p >= 1 else regular_module(a)
            incl = stages[p].cylinder.incl if p < len(stages) else cyl.incl
            if not (mat_equal(rt * incl, F.identity(tgt.dim)) and is_A_linear(rt, src, tgt)):
                split_ok = False
        stage = BarStage(n, Cn, X, dbar, cyl, list(filt), sub_dims, expected,
                         list(retractions), complex_ok, split_ok)
        stages.append(stage)
        prev = Cn
        prev_from_free = cyl.from_free
    return stages


def bar_stage(a: ComoduleAlgebra, n: int, integ: IntegralData | None = None,
              truncation: int = 3) -> BarStage:
    return bar_stages(a, n, integ, truncation)[n]


def stage_is_injective(stage: BarStage, integ: IntegralData | None = None) -> bool:
    return is_injective(stage.stage.comodule, integ).injective


# ---------------------------------------------------------------------------
# Hopf modules and the fundamental theorem

@dataclass(frozen=True, eq=False)
class HopfModule:
    """Left Hopf module over a Hopf algebra A: action ``A⊗M -> M``, coaction ``M -> A⊗M``."""
    name: str
    hopf: HopfAlgebra
    space: VectorSpace
    action: object
    coaction: object


def hopf_module_failures(M: HopfModule) -> list[str]:
    A = M.hopf
    F, dA, dM = A.field, A.dim, M.space.dim
    IA, IM = F.identity(dA), F.identity(dM)
    act, co = M.action, M.coaction
    out = []
    if not mat_equal(act * kron(A.mult, IM), act * kron(IA, act)) or \
            not mat_equal(act * kron(A.unit, IM), IM):
        out.append("action")
    if not mat_equal(kron(A.comult, IM) * co, kron(IA, co) * co) or \
            not mat_equal(kron(A.counit, IM) * co, IM):
        out.append("coaction")
    # ρ(a·m) = a_1 m^{(-1)} ⊗ a_2·m^{(0)}
    from .hopf import middle_swap
    lhs = co * act
    rhs = kron(A.mult, act) * middle_swap(F, dA, dA, dA, dM) * kron(A.comult, co)
    if not mat_equal(lhs, rhs):
        out.append("compatibility")
    return out


@dataclass(frozen=True, eq=False)
class FundamentalData:
    coinvariants: object        # columns: basis of M^{coA}
    comparison: object          # A⊗M^{coA} -> M
    isomorphism: bool
    failures: list


def coinvariants_and_fundamental(M: HopfModule) -> FundamentalData:
    A = M.hopf
    F, dM = A.field, M.space.dim
    fails = hopf_module_failures(M)
    triv = kron(A.unit, F.identity(dM))
    K = el.nullspace(M.coaction - triv)
    comp = M.action * kron(A.identity(), K)
    iso = not fails and comp.nrows() == comp.ncols() and el.rank(comp) == dM
    return FundamentalData(K, comp, iso, fails)


def regular_hopf_module(A: HopfAlgebra) -> HopfModule:
    return HopfModule(A.name, A, A.space, A.mult, A.comult)


def induced_hopf_module(A: HopfAlgebra, vdim: int) -> HopfModule:
    """``A⊗V`` with action and coaction on the A factor."""
    F = A.field
    IV = F.identity(vdim)
    return HopfModule(f"{A.name}⊗V", A, A.space.tensor(VectorSpace(vdim)),
                      kron(A.mult, IV), kron(A.comult, IV))
