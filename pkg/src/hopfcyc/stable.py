"""
Stable category of comodules over a finite-dimensional Hopf algebra.

A colinear map is stably trivial when it factors through an injective
comodule; since ``ρ_M: M -> (M⊗H, id⊗Δ)`` is a monomorphism into an injective,
this happens iff it factors through ρ_M.  Maps out of the cofree comodule are
parametrised linearly (``comod.cofree_map``), so every stable question below is
a single exact linear system.

Shift functors.  ``M⊗H`` carries the diagonal coaction throughout.  Then
``id⊗η: M -> M⊗H`` and ``id⊗Λ′: M⊗H -> M`` are colinear, and

* ``ΣM = coker(id⊗η)``,   ``Σ⁻¹M = ker(id⊗Λ′)``.

Via the untwisting isomorphism ``id⊗η`` becomes ``ρ_M`` into the cofree
comodule, so ΣM is the usual cosyzygy.  The chosen element ``x`` with
``Λ′(x) ≠ 0`` enters through the k-linear section ``m ↦ m⊗x/Λ′(x)`` of
``id⊗Λ′``; dually ``id⊗ε`` retracts ``id⊗η``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import exactlin as el
from .comod import (ColinearMap, Comodule, check_same_hopf, diagonal_free, direct_sum,
                    factor_through_coaction, hom_colinear, is_colinear, quotient_comodule,
                    subcomodule, through_rho_image)
from .exactlin import Field, kron, mat_equal
from .hopf import IntegralData, cofrobenius_data


# ---------------------------------------------------------------------------
# stably trivial maps and stable homs

@dataclass(frozen=True, eq=False)
class StableTriviality:
    trivial: bool
    witness: object | None    # colinear (M⊗H, id⊗Δ) -> N with witness∘ρ_M = f

    def __bool__(self):
        return self.trivial


def stably_trivial(f: ColinearMap) -> StableTriviality:
    w = factor_through_coaction(f.matrix, f.source, f.target)
    return StableTriviality(w is not None, w)


@dataclass(frozen=True, eq=False)
class StableHomSpace:
    ambient: list          # basis of Hom^H(M, N), matrices
    trivial: list          # basis of the stably trivial subspace, matrices
    quotient_dim: int


def stable_hom(M: Comodule, N: Comodule) -> StableHomSpace:
    check_same_hopf(M, N)
    amb = hom_colinear(M, N)
    T = through_rho_image(M, N)
    triv = [el.unvec(el.submatrix(T, None, [j]), N.dim, M.dim) for j in range(T.ncols())]
    return StableHomSpace(amb, triv, len(amb) - len(triv))


@dataclass(frozen=True, eq=False)
class StableEquivalence:
    equivalence: bool
    inverse: object | None         # colinear g: N -> M
    witness_source: object | None  # w1 with g∘f − id_M = w1∘ρ_M
    witness_target: object | None  # w2 with f∘g − id_N = w2∘ρ_N

    def __bool__(self):
        return self.equivalence


def is_stable_equivalence(f: ColinearMap) -> StableEquivalence:
    """Solve for ``(g, φ1, φ2)`` jointly; see module docstring."""
    from .comod import _hom_system, _through_rho_operator, cofree_map
    M, N = f.source, f.target
    check_same_hopf(M, N)
    F: Field = M.field
    m, n = M.dim, N.dim
    fm = f.matrix
    colin = _hom_system(N, M)                         # on vec g (m x n)
    op1 = _through_rho_operator(M, M)                 # vec φ1 -> vec(w1 ρ_M)
    op2 = _through_rho_operator(N, N)
    gf = kron(fm.transpose(), F.identity(m))          # vec g -> vec(g f)
    fg = kron(F.identity(n), fm)                      # vec g -> vec(f g)
    ng, n1, n2 = m * n, m * m, n * n
    rows = [
        el.hstack(F, [colin, F.zeros(colin.nrows(), n1), F.zeros(colin.nrows(), n2)]),
        el.hstack(F, [gf, -op1, F.zeros(n1, n2)]),
        el.hstack(F, [fg, F.zeros(n2, n1), -op2]),
    ]
    A = el.vstack(F, rows)
    b = el.vstack(F, [F.zeros(colin.nrows(), 1), el.vec(F.identity(m)), el.vec(F.identity(n))])
    sol = el.solve_affine(A, b)
    if sol is None:
        return StableEquivalence(False, None, None, None)
    g = el.unvec(el.submatrix(sol, range(ng), None), m, n)
    phi1 = el.unvec(el.submatrix(sol, range(ng, ng + n1), None), m, m)
    phi2 = el.unvec(el.submatrix(sol, range(ng + n1, ng + n1 + n2), None), n, n)
    return StableEquivalence(True, g, cofree_map(phi1, M, m), cofree_map(phi2, N, n))


# ---------------------------------------------------------------------------
# short exact sequences

@dataclass(frozen=True, eq=False)
class ShortExact:
    """``0 -> A -i-> B -p-> C -> 0`` with dimension data for reporting."""
    left: Comodule
    middle: Comodule
    right: Comodule
    incl: object
    proj: object

    def exact(self) -> bool:
        i, p = self.incl, self.proj
        return (el.rank(i) == self.left.dim and el.rank(p) == self.right.dim
                and el.is_zero(p * i) and self.middle.dim == self.left.dim + self.right.dim)

    def colinear(self) -> bool:
        return (is_colinear(self.incl, self.left, self.middle)
                and is_colinear(self.proj, self.middle, self.right))


def _unit_inclusion(M: Comodule):
    h = M.hopf
    return kron(M.field.identity(M.dim), h.unit)


def _lam_projection(M: Comodule, integ: IntegralData):
    return kron(M.field.identity(M.dim), integ.right)


def _normalized_x(integ: IntegralData, F: Field):
    if integ.x is None:
        raise ValueError("no element x with Λ′(x) ≠ 0 in the integral data")
    return integ.x * (F(1) / integ.right_value(integ.x))


# ---------------------------------------------------------------------------
# module-action plumbing: an action A⊗M -> M as the list of left multiplications

def action_to_mults(action, dim_a: int, dim_m: int) -> list:
    return [el.submatrix(action, None, range(a * dim_m, (a + 1) * dim_m)) for a in range(dim_a)]


def mults_to_action(F: Field, mults: list, dim_m: int):
    return el.hstack(F, mults, rows=dim_m) if mults else F.zeros(dim_m, 0)


def _sum_mults(F, ma: list, mb: list):
    return [el.block_diag(F, [x, y]) for x, y in zip(ma, mb)]


def _tensor_h_mults(F, mults: list, d: int):
    return [kron(x, F.identity(d)) for x in mults]


@dataclass(frozen=True, eq=False)
class ShiftData:
    comodule: Comodule
    sequence: ShortExact
    section: object | None      # k-linear section of the quotient map (Σ) / of id⊗Λ′ (Σ⁻¹)
    action: object | None = None


def suspend(M: Comodule, integ: IntegralData | None = None, action=None, dim_a: int = 0,
            name: str | None = None) -> ShiftData:
    """``ΣM = coker(id⊗η: M -> M⊗H)`` with its defining exact sequence."""
    integ = integ or cofrobenius_data(M.hopf)
    if integ.x is None:
        raise ValueError("no element x with Λ′(x) ≠ 0 in the integral data")
    F = M.field
    MH = diagonal_free(M)
    i = _unit_inclusion(M)
    Q, P, S = quotient_comodule(MH, i, name or f"Σ{M.name}")
    act = None
    if action is not None:
        mh = _tensor_h_mults(F, action_to_mults(action, dim_a, M.dim), M.hopf.dim)
        act = mults_to_action(F, [P * x * S for x in mh], Q.dim)
    return ShiftData(Q, ShortExact(M, MH, Q, i, P), S, act)


def desuspend(M: Comodule, integ: IntegralData | None = None, action=None, dim_a: int = 0,
              name: str | None = None) -> ShiftData:
    """``Σ⁻¹M = ker(id⊗Λ′: M⊗H -> M)`` with its defining exact sequence."""
    integ = integ or cofrobenius_data(M.hopf)
    F = M.field
    MH = diagonal_free(M)
    p = _lam_projection(M, integ)
    K = el.nullspace(p)
    D, incl = subcomodule(MH, K, name or f"Σ⁻¹{M.name}")
    sec = kron(F.identity(M.dim), _normalized_x(integ, F))
    act = None
    if action is not None:
        mh = _tensor_h_mults(F, action_to_mults(action, dim_a, M.dim), M.hopf.dim)
        act = mults_to_action(F, [el.solve_affine(incl, x * incl) for x in mh], D.dim)
    return ShiftData(D, ShortExact(D, MH, M, incl, p), sec, act)


def comparison_to_desuspended_suspension(M: Comodule, integ: IntegralData | None = None):
    """The canonical colinear map ``M -> Σ⁻¹ΣM``.

    A colinear lift ``g: M⊗H -> ΣM⊗H`` of the quotient map along ``id⊗Λ′``
    is found by an echelon-canonical solve; ``g∘(id⊗η)`` lands in the kernel.
    Returns ``(map, ΣM data, Σ⁻¹ΣM data)``.
    """
    integ = integ or cofrobenius_data(M.hopf)
    F = M.field
    sus = suspend(M, integ)
    des = desuspend(sus.comodule, integ)
    MH = sus.sequence.middle
    SH = des.sequence.middle
    basis = hom_colinear(MH, SH)
    lam = des.sequence.proj
    target = sus.sequence.proj
    # Σ c_j (lam∘B_j) = target
    A = el.hstack(F, [el.vec(lam * B) for B in basis]) if basis else F.zeros(target.nrows() * target.ncols(), 0)
    c = el.solve_affine(A, el.vec(target))
    if c is None:
        raise RuntimeError("no colinear lift exists (the middle term is not projective?)")
    g = F.zeros(SH.dim, MH.dim)
    for j, B in enumerate(basis):
        if c[j, 0] != 0:
            g = g + B * c[j, 0]
    into = g * _unit_inclusion(M)
    comp = el.solve_affine(des.sequence.incl, into)
    return ColinearMap(M, des.comodule, comp), sus, des


# ---------------------------------------------------------------------------
# cylinders

@dataclass(frozen=True, eq=False)
class CylinderData:
    """``C_f`` = pushout of ``(id⊗η: X -> X⊗H, f: X -> Y)``."""
    cylinder: Comodule
    incl: object            # Y -> C_f, colinear
    proj: object            # C_f -> ΣX, colinear
    retraction: object      # C_f -> Y, k-linear (A-linear) with retraction∘incl = id
    from_free: object       # X⊗H -> C_f, colinear
    suspension: ShiftData
    sequence: ShortExact
    action: object | None = None


def _as_colinear(f) -> ColinearMap:
    if isinstance(f, ColinearMap):
        return f
    raise TypeError("expected a ColinearMap")


def mapping_cylinder(f: ColinearMap, integ: IntegralData | None = None,
                     actions: tuple | None = None, name: str | None = None) -> CylinderData:
    """Mapping cylinder with its exact sequence ``0 -> Y -> C_f -> ΣX -> 0``.

    ``actions = (act_X, act_Y, dim_A)`` makes the construction one of
    A-module objects: all structure maps are then A-linear and the returned
    ``action`` is the induced action on ``C_f``.
    """
    f = _as_colinear(f)
    X, Y = f.source, f.target
    h = check_same_hopf(X, Y)
    integ = integ or cofrobenius_data(h)
    F, d = h.field, h.dim
    XH = diagonal_free(X)
    S = direct_sum(XH, Y)
    i = _unit_inclusion(X)
    span = el.vstack(F, [i, -f.matrix])
    C, P, Sec = quotient_comodule(S, span, name or f"C_{X.name}->{Y.name}")
    nx = XH.dim
    inc_y = P * el.vstack(F, [F.zeros(nx, Y.dim), F.identity(Y.dim)])
    from_free = P * el.vstack(F, [F.identity(nx), F.zeros(Y.dim, nx)])
    act_x = act_y = None
    if actions is not None:
        act_x, act_y, dim_a = actions
        sus = suspend(X, integ, act_x, dim_a)
    else:
        sus = suspend(X, integ)
    # C_f -> ΣX: quotient on X⊗H, zero on Y
    proj = el.hstack(F, [sus.sequence.proj, F.zeros(sus.comodule.dim, Y.dim)]) * Sec
    retr_s = el.hstack(F, [kron(f.matrix, h.counit), F.identity(Y.dim)])
    retraction = retr_s * Sec
    act = None
    if actions is not None:
        ms = _sum_mults(F, _tensor_h_mults(F, action_to_mults(act_x, dim_a, X.dim), d),
                        action_to_mults(act_y, dim_a, Y.dim))
        act = mults_to_action(F, [P * x * Sec for x in ms], C.dim)
    seq = ShortExact(Y, C, sus.comodule, inc_y, proj)
    return CylinderData(C, inc_y, proj, retraction, from_free, sus, seq, act)


@dataclass(frozen=True, eq=False)
class CocylinderData:
    """``P_f`` = pullback of ``(f: X -> Y, id⊗Λ′: Y⊗H -> Y)``."""
    cocylinder: Comodule
    proj: object            # P_f -> X, colinear
    incl: object            # Σ⁻¹Y -> P_f, colinear
    section: object         # X -> P_f, k-linear (A-linear) with proj∘section = id
    to_free: object         # P_f -> Y⊗H, colinear
    desuspension: ShiftData
    sequence: ShortExact
    action: object | None = None


def mapping_cocylinder(f: ColinearMap, integ: IntegralData | None = None,
                       actions: tuple | None = None, name: str | None = None) -> CocylinderData:
    """Mapping cocylinder with its exact sequence ``0 -> Σ⁻¹Y -> P_f -> X -> 0``."""
    f = _as_colinear(f)
    X, Y = f.source, f.target
    h = check_same_hopf(X, Y)
    integ = integ or cofrobenius_data(h)
    F, d = h.field, h.dim
    YH = diagonal_free(Y)
    S = direct_sum(X, YH)
    lam = _lam_projection(Y, integ)
    K = el.nullspace(el.hstack(F, [f.matrix, -lam]))
    Pf, incl_s = subcomodule(S, K, name or f"P_{X.name}->{Y.name}")
    nx = X.dim
    proj = el.hstack(F, [F.identity(nx), F.zeros(nx, YH.dim)]) * incl_s
    to_free = el.hstack(F, [F.zeros(YH.dim, nx), F.identity(YH.dim)]) * incl_s
    act_x = act_y = None
    if actions is not None:
        act_x, act_y, dim_a = actions
        des = desuspend(Y, integ, act_y, dim_a)
    else:
        des = desuspend(Y, integ)
    into_s = el.vstack(F, [F.zeros(nx, des.comodule.dim), des.sequence.incl])
    incl = el.solve_affine(incl_s, into_s)
    xh = _normalized_x(integ, F)
    sec_s = el.vstack(F, [F.identity(nx), kron(f.matrix, xh)])
    section = el.solve_affine(incl_s, sec_s)
    act = None
    if actions is not None:
        ms = _sum_mults(F, action_to_mults(act_x, dim_a, X.dim),
                        _tensor_h_mults(F, action_to_mults(act_y, dim_a, Y.dim), d))
        act = mults_to_action(F, [el.solve_affine(incl_s, x * incl_s) for x in ms], Pf.dim)
    seq = ShortExact(des.comodule, Pf, X, incl, proj)
    return CocylinderData(Pf, proj, incl, section, to_free, des, seq, act)


# ---------------------------------------------------------------------------
# triangles

@dataclass(frozen=True, eq=False)
class Triangle:
    X: Comodule
    Y: Comodule
    Z: Comodule
    SX: Comodule
    u: object   # X -> Y
    v: object   # Y -> Z
    w: object   # Z -> ΣX

    def composites_stably_trivial(self) -> dict[str, bool]:
        return {
            "vu": stably_trivial(ColinearMap(self.X, self.Z, self.v * self.u)).trivial,
            "wv": stably_trivial(ColinearMap(self.Y, self.SX, self.w * self.v)).trivial,
        }


def cylinder_triangle(f: ColinearMap, cyl: CylinderData) -> Triangle:
    """``X -f-> Y -> C_f -> ΣX``."""
    return Triangle(f.source, f.target, cyl.cylinder, cyl.suspension.comodule,
                    f.matrix, cyl.incl, cyl.proj)
