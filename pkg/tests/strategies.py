"""Hypothesis strategies for random comodules over small Hopf algebras."""

from hypothesis import strategies as st

import hopfcyc.exactlin as el
from hopfcyc.comod import (Comodule, direct_sum, grouplike_comodule, regular_comodule, subcomodule,
                           trivial_comodule)
from hopfcyc.exactlin import GF, QQ
from hopfcyc.hopf import dual_hopf, group_algebra, sweedler


def small_hopf_algebras():
    """Hopf algebras of dimension <= 4 with their grouplike labels."""
    out = []
    for F in (QQ, GF(2), GF(3)):
        for n in (2, 3, 4):
            h = group_algebra(n, F)
            out.append((h, list(h.labels)))
            out.append((dual_hopf(h), []))
    out.append((sweedler(QQ), ["e", "g"]))
    out.append((sweedler(GF(3)), ["e", "g"]))
    out.append((dual_hopf(sweedler(QQ)), []))
    return out


HOPFS = small_hopf_algebras()


def _pieces(h, grouplikes):
    pieces = [trivial_comodule(h)]
    pieces += [grouplike_comodule(h, g) for g in grouplikes]
    reg = regular_comodule(h)
    pieces.append(reg)
    if h.name.startswith("sweedler") and not h.name.endswith("*"):
        # span{g, x} is a 2-dimensional non-split subcomodule of H
        F = h.field
        sub, _ = subcomodule(reg, F.from_rows([[0, 0], [1, 0], [0, 1], [0, 0]]), "span(g,x)")
        pieces.append(sub)
    return pieces


def change_of_basis(M: Comodule, P) -> Comodule:
    """Transport the coaction along ``v ↦ P v``: ``ρ' = (P⊗id) ρ P⁻¹``."""
    h = M.hopf
    Pinv = el.inverse(P)
    rho = el.kron(P, h.identity()) * M.coaction * Pinv
    return Comodule(f"{M.name}^P", h, M.space, rho)


@st.composite
def invertible(draw, F, n):
    """``L U`` with unitriangular factors, so the minimal example is the identity."""
    entries = st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n)
    lo, up = draw(entries), draw(entries)
    L = F.from_rows([[1 if i == j else (lo[i * n + j] if j < i else 0) for j in range(n)] for i in range(n)])
    U = F.from_rows([[1 if i == j else (up[i * n + j] if j > i else 0) for j in range(n)] for i in range(n)])
    return L * U


@st.composite
def comodules(draw, max_dim=6):
    h, grouplikes = draw(st.sampled_from(HOPFS))
    pieces = _pieces(h, grouplikes)
    M = draw(st.sampled_from(pieces))
    while True:
        nxt = draw(st.sampled_from(pieces + [None]))
        if nxt is None or M.dim + nxt.dim > max_dim:
            break
        M = direct_sum(M, nxt)
    P = draw(invertible(h.field, M.dim))
    return change_of_basis(M, P)
