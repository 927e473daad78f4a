"""
Hochschild and cyclic homology over an exact field.

Conventions (frozen; every identity is machine-checked):

    b   = Σ_{i=0}^{n} (−1)^i d_i                      C_n -> C_{n-1}
    λ_n = (−1)^n t_n,   N_n = Σ_{i=0}^{n} λ_n^i
    s   = t_{n+1} s_n   (extra degeneracy [a_0|…|a_n] ↦ [1|a_0|…|a_n])
    B   = (1 − λ_{n+1}) s N_n                         C_n -> C_{n+1}

Tot_n = ⊕_{p≥0} C_{n-2p} with D = b + B; the bicomplex has
``B_{pq} = C_{q-p}`` for ``q ≥ p``.  Data up to degree N determines
``HC_n`` for ``n ≤ N − 1``; degree N is reported but flagged unreliable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import exactlin as el
from .amod import ComoduleAlgebra
from .exactlin import Field, kron
from .hopf import swap_matrix


@dataclass(frozen=True, eq=False)
class GradedComplex:
    """Chain complex ``C_0 <- C_1 <- …``; ``d[n]: C_n -> C_{n-1}`` for ``1 <= n <= top``."""
    field: Field
    dims: tuple
    d: dict

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def is_complex(self) -> bool:
        for n in range(2, self.top + 1):
            if not el.is_zero(self.d[n - 1] * self.d[n]):
                return False
        return True

    def homology(self) -> list[int]:
        """Homology dimensions in degrees ``0..top``; degree ``top`` ignores the missing ``d_{top+1}``."""
        ranks = {n: el.rank(self.d[n]) for n in range(1, self.top + 1)}
        return [self.dims[n] - ranks.get(n, 0) - ranks.get(n + 1, 0) for n in range(self.top + 1)]


@dataclass(frozen=True, eq=False)
class MixedComplex:
    """``b[n]: C_n -> C_{n-1}`` (``1 <= n <= top``), ``B[n]: C_n -> C_{n+1}`` (``n < top``)."""
    field: Field
    dims: tuple
    b: dict
    B: dict

    @property
    def top(self) -> int:
        return len(self.dims) - 1


@dataclass
class MixedCertificate:
    b_squared: bool
    B_squared: bool
    anticommute: bool

    @property
    def ok(self) -> bool:
        return self.b_squared and self.B_squared and self.anticommute


def certify(mc: MixedComplex) -> MixedCertificate:
    """``b² = 0``, ``B² = 0`` and ``bB + Bb = 0`` wherever both sides are defined."""
    F, N = mc.field, mc.top
    b2 = all(el.is_zero(mc.b[n - 1] * mc.b[n]) for n in range(2, N + 1))
    B2 = all(el.is_zero(mc.B[n + 1] * mc.B[n]) for n in range(N - 1))
    ac = True
    for n in range(N):
        # C_n -> C_n
        lhs = mc.b[n + 1] * mc.B[n]
        if n >= 1:
            lhs = lhs + mc.B[n - 1] * mc.b[n]
        if not el.is_zero(lhs):
            ac = False
    return MixedCertificate(b2, B2, ac)


# ---------------------------------------------------------------------------
# operators from algebra data

def _face(a: ComoduleAlgebra, n: int, i: int):
    """``d_i: A^{⊗(n+1)} -> A^{⊗n}``; the last face wraps ``a_n a_0``."""
    F, d = a.field, a.dim
    if i < n:
        return el.kron_all([F.identity(d ** i), a.mult, F.identity(d ** (n - i - 1))])
    return el.kron_all([a.mult, F.identity(d ** (n - 1))]) * cyclic_permutation(a, n)


def cyclic_permutation(a: ComoduleAlgebra, n: int):
    """Unsigned ``t_n [a_0|…|a_n] = [a_n|a_0|…|a_{n-1}]``."""
    F, d = a.field, a.dim
    return el.permute_factors(F, [d] * (n + 1), [n] + list(range(n)))


def hochschild_b(a: ComoduleAlgebra, n: int):
    if n < 1:
        raise ValueError("b is defined for n >= 1")
    out = _face(a, n, 0)
    for i in range(1, n + 1):
        f = _face(a, n, i)
        out = out - f if i % 2 else out + f
    return out


def extra_degeneracy(a: ComoduleAlgebra, n: int):
    """``[a_0|…|a_n] ↦ [1|a_0|…|a_n]``."""
    return kron(a.unit, a.field.identity(a.dim ** (n + 1)))


def _signed(t, n: int):
    return -t if n % 2 else t


def _norm(lam, F: Field, dim: int, n: int):
    out = F.identity(dim)
    p = F.identity(dim)
    for _ in range(n):
        p = lam * p
        out = out + p
    return out


def connes_B_parts(F: Field, t_n, t_next, s_extra, n: int):
    """``(1 − λ_{n+1}) s N_n`` from unsigned cyclic operators and the extra degeneracy."""
    lam_n, lam_next = _signed(t_n, n), _signed(t_next, n + 1)
    N_n = _norm(lam_n, F, t_n.nrows(), n)
    return (F.identity(t_next.nrows()) - lam_next) * s_extra * N_n


def connes_B(a: ComoduleAlgebra, n: int):
    F = a.field
    return connes_B_parts(F, cyclic_permutation(a, n), cyclic_permutation(a, n + 1),
                          extra_degeneracy(a, n), n)


def mixed_from_algebra(a: ComoduleAlgebra, N: int) -> MixedComplex:
    dims = tuple(a.dim ** (n + 1) for n in range(N + 1))
    b = {n: hochschild_b(a, n) for n in range(1, N + 1)}
    B = {n: connes_B(a, n) for n in range(N)}
    return MixedComplex(a.field, dims, b, B)


def mixed_from_cyclic_module(X, N: int | None = None) -> MixedComplex:
    """Mixed complex of a cyclic object (anything with face/degeneracy/cyclic/dim/field).

    The extra degeneracy is ``t_{n+1} s_n``; no algebra structure is used.
    """
    N = X.max_degree if N is None else N
    F = X.field
    dims = tuple(X.dim(n) for n in range(N + 1))
    b = {}
    for n in range(1, N + 1):
        out = X.face(n, 0)
        for i in range(1, n + 1):
            out = out - X.face(n, i) if i % 2 else out + X.face(n, i)
        b[n] = out
    B = {}
    for n in range(N):
        s = X.cyclic(n + 1) * X.degeneracy(n, n)
        B[n] = connes_B_parts(F, X.cyclic(n), X.cyclic(n + 1), s, n)
    return MixedComplex(F, dims, b, B)


# ---------------------------------------------------------------------------
# totalisation

def total_complex(mc: MixedComplex) -> GradedComplex:
    """``Tot_n = ⊕_p C_{n-2p}`` with ``D = b + B`` (summands ordered by p)."""
    F, N = mc.field, mc.top
    parts = {n: [n - 2 * p for p in range(n // 2 + 1)] for n in range(N + 1)}
    dims = tuple(sum(mc.dims[k] for k in parts[n]) for n in range(N + 1))
    d = {}
    for n in range(1, N + 1):
        rows, cols = parts[n - 1], parts[n]
        roff = {k: sum(mc.dims[j] for j in rows[:i]) for i, k in enumerate(rows)}
        coff = {k: sum(mc.dims[j] for j in cols[:i]) for i, k in enumerate(cols)}
        data = {}
        for k in cols:
            blocks = []
            if k >= 1:
                blocks.append((k - 1, mc.b[k]))
            if k + 1 in roff:
                blocks.append((k + 1, mc.B[k]))
            for tgt, m in blocks:
                for (i, j), v in el.nonzero_entries(m).items():
                    data[roff[tgt] + i, coff[k] + j] = data.get((roff[tgt] + i, coff[k] + j), 0) + v
        d[n] = F.from_sparse(dims[n - 1], dims[n], data)
    return GradedComplex(F, dims, d)


@dataclass(frozen=True, eq=False)
class Bicomplex:
    """``spaces[p, q] = C_{q-p}`` for ``q >= p``; vertical ``b``, horizontal ``B``."""
    field: Field
    top: int
    spaces: dict           # (p, q) -> dim
    vertical: dict         # (p, q) -> matrix B_{pq} -> B_{p,q-1}
    horizontal: dict       # (p, q) -> matrix B_{pq} -> B_{p-1,q}

    def squares_anticommute(self) -> bool:
        for (p, q), v in self.vertical.items():
            h = self.horizontal.get((p, q - 1))
            h2 = self.horizontal.get((p, q))
            v2 = self.vertical.get((p - 1, q))
            if h is None or h2 is None or v2 is None:
                continue
            if not el.is_zero(h * v + v2 * h2):
                return False
        return True

    def total(self) -> GradedComplex:
        F, N = self.field, self.top
        cells = {n: sorted((p, q) for (p, q) in self.spaces if p + q == n) for n in range(N + 1)}
        dims = tuple(sum(self.spaces[c] for c in cells[n]) for n in range(N + 1))
        d = {}
        for n in range(1, N + 1):
            roff, off = {}, 0
            for c in cells[n - 1]:
                roff[c] = off
                off += self.spaces[c]
            data, coff = {}, 0
            for (p, q) in cells[n]:
                for tgt, m in (((p, q - 1), self.vertical.get((p, q))), ((p - 1, q), self.horizontal.get((p, q)))):
                    if m is None or tgt not in roff:
                        continue
                    for (i, j), v in el.nonzero_entries(m).items():
                        key = (roff[tgt] + i, coff + j)
                        data[key] = data.get(key, 0) + v
                coff += self.spaces[p, q]
            d[n] = F.from_sparse(dims[n - 1], dims[n], data)
        return GradedComplex(F, dims, d)


def bicomplex_from_algebra(a: ComoduleAlgebra, N: int) -> Bicomplex:
    """The (b, B)-bicomplex of A in total degrees ``0..N``, assembled cell by cell."""
    spaces, vert, hor = {}, {}, {}
    for p in range(N + 1):
        for q in range(p, N + 1 - p):
            spaces[p, q] = a.dim ** (q - p + 1)
    for (p, q) in spaces:
        k = q - p
        if k >= 1:
            vert[p, q] = hochschild_b(a, k)
        if p >= 1 and (p - 1, q) in spaces:
            hor[p, q] = connes_B(a, k)
    return Bicomplex(a.field, N, spaces, vert, hor)


# ---------------------------------------------------------------------------
# homology reports

@dataclass
class HomologyReport:
    dims: list               # degrees 0..top
    reliable: int            # last degree whose value is fully determined
    certificate: MixedCertificate | None = None
    path: str = ""

    def reliable_dims(self) -> list[int]:
        return self.dims[:self.reliable + 1]


def cyclic_homology(mc: MixedComplex, path: str = "mixed") -> HomologyReport:
    cert = certify(mc)
    if not cert.ok:
        raise ValueError(f"mixed-complex identities fail: {cert}")
    tot = total_complex(mc)
    if not tot.is_complex():
        raise ValueError("total differential does not square to zero")
    return HomologyReport(tot.homology(), mc.top - 1, cert, path)


def hochschild_homology(mc: MixedComplex) -> HomologyReport:
    cx = GradedComplex(mc.field, mc.dims, mc.b)
    return HomologyReport(cx.homology(), mc.top - 1, None, "hochschild")


def cyclic_homology_bicomplex(a: ComoduleAlgebra, N: int) -> HomologyReport:
    bc = bicomplex_from_algebra(a, N)
    if not bc.squares_anticommute():
        raise ValueError("bicomplex squares do not anticommute")
    tot = bc.total()
    if not tot.is_complex():
        raise ValueError("total differential does not square to zero")
    return HomologyReport(tot.homology(), N - 1, None, "bicomplex")


def connes_complex_homology(a: ComoduleAlgebra, N: int) -> HomologyReport:
    """Homology of ``C_n / (1 − λ)`` with the induced b; equals HC in characteristic 0."""
    F = a.field
    if not F.is_rational:
        raise ValueError("the Connes complex computes HC only in characteristic 0")
    proj, dims = {}, []
    for n in range(N + 1):
        lam = _signed(cyclic_permutation(a, n), n)
        dim = a.dim ** (n + 1)
        img = el.column_space(F.identity(dim) - lam)
        q = el.quotient_and_section(el.LinMap(el.VectorSpace(img.ncols()), el.VectorSpace(dim), img, F))
        proj[n] = (q.projection.matrix, q.section.matrix)
        dims.append(q.quotient.dim)
    d = {}
    for n in range(1, N + 1):
        P, _ = proj[n - 1]
        _, S = proj[n]
        d[n] = P * hochschild_b(a, n) * S
    cx = GradedComplex(F, tuple(dims), d)
    if not cx.is_complex():
        raise ValueError("induced differential does not square to zero")
    return HomologyReport(cx.homology(), N - 1, None, "connes")


def hc0_oracle(a: ComoduleAlgebra) -> int:
    """``dim A/[A, A]`` via the rank of ``x⊗y ↦ xy − yx``."""
    comm = a.mult - a.mult * swap_matrix(a.field, a.dim, a.dim)
    return a.dim - el.rank(comm)
