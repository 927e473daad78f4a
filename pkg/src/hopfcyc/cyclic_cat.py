"""
Words in the generators of Δ ⊂ Λ₊ ⊂ Λ_ℕ ⊂ Λ_∞ and Λ, read as operators.

Convention (contravariant, cyclic-object side): a generator acts on a graded
object X.  ``d_i@n: X_n -> X_{n-1}``, ``s_i@n: X_n -> X_{n+1}`` (``0 <= i <= n``),
``t@n, t^-1@n: X_n -> X_n``.  The degree after ``@`` is always the source.

Word syntax is right-to-left composition: ``d1@3 . t@3 . s0@2`` applies
``s0@2`` first.  Powers ``t^k@n`` (k may be negative), ``id@n`` and the
alternative spelling ``d(1)@3`` are accepted.

Normal form: ``t^k ∘ (s_{j_q}∘…∘s_{j_1}) ∘ (d_{i_p}∘…∘d_{i_1})`` with, in
application order, faces ``i_1 > … > i_p`` and degeneracies ``j_1 < … < j_q``.
Pushing a face/degeneracy to the right of ``t^{±1}`` uses

    d_i∘t = t∘d_{i-1} (1<=i<=n)      d_0∘t = d_n
    s_i∘t = t∘s_{i-1} (1<=i<=n)      s_0∘t = t²∘s_n
    d_i∘t⁻¹ = t⁻¹∘d_{i+1} (i<n)      d_n∘t⁻¹ = d_0
    s_i∘t⁻¹ = t⁻¹∘s_{i+1} (i<n)      s_n∘t⁻¹ = t⁻²∘s_0

and the simplicial part is composed as a monotone map, whose canonical
epi–mono factorisation gives the face and degeneracy lists.  In Λ the
t-power is reduced modulo n+1.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Protocol

from . import exactlin as el

TAGS = ("delta", "lambda_plus", "lambda_nat", "lambda_infty", "lambda")


class MalformedWord(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    kind: str        # "d", "s", "t"
    index: int       # face/degeneracy index, or the power for "t"
    degree: int      # source degree

    @property
    def target(self) -> int:
        if self.kind == "d":
            return self.degree - 1
        if self.kind == "s":
            return self.degree + 1
        return self.degree

    def __str__(self):
        if self.kind == "t":
            if self.index == 1:
                return f"t@{self.degree}"
            return f"t^{self.index}@{self.degree}"
        return f"{self.kind}{self.index}@{self.degree}"


@dataclass(frozen=True)
class MorphismWord:
    """Letters in written (composition) order: the last letter acts first."""
    source: int
    target: int
    letters: tuple[Letter, ...]
    tag: str = "lambda_infty"

    def __str__(self):
        if not self.letters:
            return f"id@{self.source}"
        return " . ".join(str(l) for l in self.letters)

    def application_order(self):
        return reversed(self.letters)


_TOKEN = re.compile(r"^(?:(d|s)\(?(\d+)\)?|t(?:\^(-?\d+))?|id)@(\d+)$")


def _check_letter(l: Letter, tag: str):
    n = l.degree
    if l.kind == "d":
        if n < 1 or not 0 <= l.index <= n:
            raise MalformedWord(f"face d{l.index}@{n} out of range")
        if tag == "lambda_plus" and l.index == n:
            raise MalformedWord(f"last face d{n}@{n} is not in lambda_plus")
    elif l.kind == "s":
        if not 0 <= l.index <= n:
            raise MalformedWord(f"degeneracy s{l.index}@{n} out of range")
    else:
        if tag in ("delta", "lambda_plus"):
            raise MalformedWord(f"cyclic operator not allowed in {tag}")
        if tag == "lambda_nat" and l.index < 0:
            raise MalformedWord("t^-1 not allowed in lambda_nat")


def make_word(letters, tag: str = "lambda_infty", source: int | None = None) -> MorphismWord:
    if tag not in TAGS:
        raise MalformedWord(f"unknown category tag {tag!r}")
    letters = tuple(letters)
    if not letters:
        if source is None:
            raise MalformedWord("empty word needs a degree")
        return MorphismWord(source, source, (), tag)
    for l in letters:
        _check_letter(l, tag)
    # degree compatibility, application order
    app = list(reversed(letters))
    for a, b in zip(app, app[1:]):
        if a.target != b.degree:
            raise MalformedWord(f"{b} cannot follow {a}: degree {a.target} != {b.degree}")
    if source is not None and app[0].degree != source:
        raise MalformedWord("source degree mismatch")
    return MorphismWord(app[0].degree, app[-1].target, letters, tag)


def parse_word(text: str, tag: str = "lambda_infty") -> MorphismWord:
    """Parse ``d1@3 . t@3 . s0@2`` (``∘`` and ``*`` are accepted separators too)."""
    parts = [p.strip() for p in re.split(r"\s*[.∘*]\s*|\s+", text.strip()) if p.strip()]
    if not parts:
        raise MalformedWord("empty word")
    letters = []
    id_degree = None
    for p in parts:
        m = _TOKEN.match(p.replace("⁻¹", "^-1"))
        if not m:
            raise MalformedWord(f"cannot parse generator {p!r}")
        kind, idx, power, deg = m.groups()
        deg = int(deg)
        if kind in ("d", "s"):
            letters.append(Letter(kind, int(idx), deg))
        elif p.startswith("id"):
            id_degree = deg
        else:
            k = int(power) if power is not None else 1
            if k != 0:
                letters.append(Letter("t", k, deg))
            else:
                id_degree = deg
    if not letters:
        return make_word((), tag, id_degree)
    w = make_word(letters, tag)
    if id_degree is not None and id_degree not in (w.source, w.target):
        # identities may sit anywhere; they just have to be compatible with a degree on the path
        degs = {w.source} | {l.target for l in letters}
        if id_degree not in degs:
            raise MalformedWord(f"id@{id_degree} is not on the path of the word")
    return w


def compose(w1: MorphismWord, w2: MorphismWord) -> MorphismWord:
    """``w1 ∘ w2`` (apply w2 first)."""
    if w2.target != w1.source:
        raise MalformedWord(f"degree mismatch: {w2.target} != {w1.source}")
    tag = w1.tag if TAGS.index(w1.tag) >= TAGS.index(w2.tag) else w2.tag
    return make_word(w1.letters + w2.letters, tag, w2.source)


def identity(n: int, tag: str = "lambda_infty") -> MorphismWord:
    return MorphismWord(n, n, (), tag)


# ---------------------------------------------------------------------------
# normal forms

@dataclass(frozen=True)
class NormalForm:
    source: int
    target: int
    faces: tuple[int, ...]        # application order, strictly decreasing
    degeneracies: tuple[int, ...]  # application order, strictly increasing
    power: int | None              # t-power (None in delta / lambda_plus)
    tag: str
    steps: int = field(default=0, compare=False)

    def to_word(self) -> MorphismWord:
        app = []
        n = self.source
        for i in self.faces:
            app.append(Letter("d", i, n))
            n -= 1
        for j in self.degeneracies:
            app.append(Letter("s", j, n))
            n += 1
        if self.power:
            app.append(Letter("t", self.power, n))
        if not app:
            return MorphismWord(self.source, self.source, (), self.tag)
        return MorphismWord(self.source, n, tuple(reversed(app)), self.tag)

    def __str__(self):
        return str(self.to_word())


def _delta_map_face(n: int, i: int):
    """Coface [n-1] -> [n] skipping i, as a tuple."""
    return tuple(j if j < i else j + 1 for j in range(n))


def _delta_map_degen(n: int, i: int):
    """Codegeneracy [n+1] -> [n] hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def _push_past_t(letter_kind: str, i: int, n: int, k: int) -> tuple[int, int, int]:
    """Rewrite ``L∘t_n^k`` as ``t_{n'}^{k'}∘L'``; returns ``(i', k', steps)``."""
    steps = 0
    kp = 0
    if k > 0:
        for _ in range(k):
            steps += 1
            if letter_kind == "d":
                if i >= 1:
                    i, kp = i - 1, kp + 1
                else:
                    i = n
            else:
                if i >= 1:
                    i, kp = i - 1, kp + 1
                else:
                    i, kp = n, kp + 2
    elif k < 0:
        for _ in range(-k):
            steps += 1
            if letter_kind == "d":
                if i < n:
                    i, kp = i + 1, kp - 1
                else:
                    i = 0
            else:
                if i < n:
                    i, kp = i + 1, kp - 1
                else:
                    i, kp = 0, kp - 2
    return i, kp, steps


def _factor(f: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical factorisation of a monotone map f: [m] -> [n]."""
    image = set(f)
    faces = tuple(sorted((x for x in range(n + 1) if x not in image), reverse=True))
    degens = tuple(j for j in range(len(f) - 1) if f[j] == f[j + 1])
    return faces, degens


def normalize(w: MorphismWord) -> NormalForm:
    tag = w.tag
    cyclic = tag in ("lambda_nat", "lambda_infty", "lambda")
    n0 = w.source
    f = tuple(range(n0 + 1))     # Δ-part as a monotone map [cur] -> [n0]
    cur = n0
    k = 0
    steps = 0
    for l in w.application_order():
        if l.kind == "t":
            k += l.index
            steps += 1
            if tag == "lambda":
                k %= cur + 1
            continue
        i, kp, st = _push_past_t(l.kind, l.index, cur, k)
        steps += st + 1
        if l.kind == "d":
            psi = _delta_map_face(cur, i)
            cur -= 1
        else:
            psi = _delta_map_degen(cur, i)
            cur += 1
        f = tuple(f[x] for x in psi)
        k = kp
        if tag == "lambda":
            k %= cur + 1
    faces, degens = _factor(f, n0)
    return NormalForm(n0, cur, faces, degens, k if cyclic else None, tag, steps)


def automorphism_normal_forms(n: int, tag: str = "lambda", max_power: int | None = None) -> set:
    """Distinct normal forms of the words ``t^j@n`` for ``0 <= j <= max_power``."""
    max_power = 3 * (n + 1) if max_power is None else max_power
    out = set()
    for j in range(max_power + 1):
        w = make_word([Letter("t", j, n)] if j else [], tag, n)
        out.add(normalize(w))
    return out


# ---------------------------------------------------------------------------
# evaluation

class OperatorSource(Protocol):
    max_degree: int
    field: object

    def face(self, n: int, i: int): ...
    def degeneracy(self, n: int, i: int): ...
    def cyclic(self, n: int): ...
    def cyclic_inverse(self, n: int): ...
    def dim(self, n: int) -> int: ...


class DegreeOutOfRange(ValueError):
    pass


def _letter_matrix(l: Letter, X: OperatorSource):
    top = X.max_degree
    if l.degree > top or l.target > top:
        raise DegreeOutOfRange(f"{l} needs degree {max(l.degree, l.target)} > {top}")
    if l.kind == "d":
        return X.face(l.degree, l.index)
    if l.kind == "s":
        return X.degeneracy(l.degree, l.index)
    base = X.cyclic(l.degree) if l.index > 0 else X.cyclic_inverse(l.degree)
    if base is None:
        raise ValueError(f"no inverse cyclic operator in degree {l.degree}")
    return el.mat_power(base, abs(l.index))


def evaluate(w: MorphismWord | NormalForm, X: OperatorSource):
    """Matrix of the operator ``X(w)``: product of generator matrices in written order."""
    if isinstance(w, NormalForm):
        w = w.to_word()
    if not w.letters:
        if w.source > X.max_degree:
            raise DegreeOutOfRange(f"degree {w.source} > {X.max_degree}")
        return X.field.identity(X.dim(w.source))
    out = None
    for l in w.letters:
        m = _letter_matrix(l, X)
        out = m if out is None else out * m
    return out


# ---------------------------------------------------------------------------
# random words (tests and the CLI demo)

def random_word(rng: random.Random, max_len: int, max_degree: int, tag: str = "lambda_infty",
                start: int | None = None) -> MorphismWord:
    """A random well-formed word staying within degrees ``0..max_degree``."""
    n = rng.randint(0, max_degree) if start is None else start
    src = n
    app: list[Letter] = []
    length = rng.randint(0, max_len)
    for _ in range(length):
        options = []
        if n >= 1:
            last = n if tag != "lambda_plus" else n - 1
            options += [Letter("d", i, n) for i in range(last + 1)]
        if n + 1 <= max_degree:
            options += [Letter("s", i, n) for i in range(n + 1)]
        if tag not in ("delta", "lambda_plus"):
            options.append(Letter("t", 1, n))
            if tag != "lambda_nat":
                options.append(Letter("t", -1, n))
        if not options:
            break
        l = rng.choice(options)
        app.append(l)
        n = l.target
    return make_word(tuple(reversed(app)), tag, src)


# ---------------------------------------------------------------------------
# the relation catalogue

@dataclass(frozen=True)
class Relation:
    name: str
    family: str
    degree: int            # source degree
    indices: tuple
    lhs: MorphismWord
    rhs: MorphismWord


def _w(*letters, tag="lambda_infty"):
    return make_word(letters, tag)


def relation_catalogue(N: int, with_inverse: bool = False, with_order: bool = True) -> list[Relation]:
    """Identities of a (para-)cyclic object among operators living in degrees ``0..N``.

    Families:

    * ``lambda_plus`` simplicial identities not involving a last face
    * ``last_face``   simplicial identities involving a last face ``d_n@n``
    * ``dt``          ``d_i t = t d_{i-1}`` for ``0 < i < n``
    * ``dt_last``     the case ``i = n``
    * ``d0t``         ``d_0 t = d_n``
    * ``st``          ``s_i t = t s_{i-1}`` for ``i > 0``
    * ``s0t``         ``s_0 t = t² s_n``
    * ``order``       ``t^{n+1} = id``
    * ``inverse``     ``t t⁻¹ = t⁻¹ t = id``
    """
    D = lambda i, n: Letter("d", i, n)  # noqa: E731
    S = lambda i, n: Letter("s", i, n)  # noqa: E731
    T = lambda n, k=1: Letter("t", k, n)  # noqa: E731
    out: list[Relation] = []

    def add(name, family, n, idx, lhs, rhs):
        out.append(Relation(name, family, n, idx, _w(*lhs), _w(*rhs) if rhs else identity(n)))

    for n in range(N + 1):
        # d_i d_j = d_{j-1} d_i, i < j, on X_n
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    fam = "last_face" if j == n else "lambda_plus"
                    add(f"d{i}d{j}", fam, n, (i, j), [D(i, n - 1), D(j, n)], [D(j - 1, n - 1), D(i, n)])
        # s_i s_j = s_{j+1} s_i, i <= j, on X_n
        if n + 2 <= N:
            for j in range(n + 1):
                for i in range(j + 1):
                    add(f"s{i}s{j}", "lambda_plus", n, (i, j), [S(i, n + 1), S(j, n)], [S(j + 1, n + 1), S(i, n)])
        # d_i s_j on X_n (s_j@n then d_i@n+1)
        if n + 1 <= N:
            for j in range(n + 1):
                for i in range(n + 2):
                    fam = "last_face" if i == n + 1 else "lambda_plus"
                    if i < j:
                        if n == 0:
                            continue
                        add(f"d{i}s{j}", fam, n, (i, j), [D(i, n + 1), S(j, n)], [S(j - 1, n - 1), D(i, n)])
                    elif i in (j, j + 1):
                        add(f"d{i}s{j}", fam, n, (i, j), [D(i, n + 1), S(j, n)], None)
                    else:
                        add(f"d{i}s{j}", fam, n, (i, j), [D(i, n + 1), S(j, n)], [S(j, n - 1), D(i - 1, n)])
        # cyclic relations
        if n >= 1:
            for i in range(1, n + 1):
                fam = "dt_last" if i == n else "dt"
                add(f"d{i}t", fam, n, (i,), [D(i, n), T(n)], [T(n - 1), D(i - 1, n)])
            add("d0t", "d0t", n, (0,), [D(0, n), T(n)], [D(n, n)])
        if n + 1 <= N:
            for i in range(1, n + 1):
                add(f"s{i}t", "st", n, (i,), [S(i, n), T(n)], [T(n + 1), S(i - 1, n)])
            add("s0t", "s0t", n, (0,), [S(0, n), T(n)], [T(n + 1, 2), S(n, n)])
        if with_order:
            add("t^(n+1)", "order", n, (), [T(n, n + 1)], None)
        if with_inverse:
            add("t.t^-1", "inverse", n, (), [T(n), T(n, -1)], None)
            add("t^-1.t", "inverse", n, (), [T(n, -1), T(n)], None)
    return out


PSEUDO_PARA_FAMILIES = ("lambda_plus",)
PARA_FAMILIES = ("lambda_plus", "last_face", "dt", "dt_last", "d0t", "st", "s0t")
CYCLIC_FAMILIES = PARA_FAMILIES + ("order",)


@dataclass
class RelationReport:
    held: list = field(default_factory=list)     # Relation
    failed: list = field(default_factory=list)   # Relation

    def families_hold(self, families) -> bool:
        return not any(r.family in families for r in self.failed)

    def failed_in(self, family: str) -> list:
        return [r for r in self.failed if r.family == family]

    def summary(self) -> dict[str, tuple[int, int]]:
        out: dict[str, list[int]] = {}
        for r in self.held:
            out.setdefault(r.family, [0, 0])[0] += 1
        for r in self.failed:
            out.setdefault(r.family, [0, 0])[1] += 1
        return {k: (v[0], v[1]) for k, v in sorted(out.items())}


def relation_defect(r: Relation, X: OperatorSource):
    return evaluate(r.lhs, X) - evaluate(r.rhs, X)


def check_relations(X: OperatorSource, relations) -> RelationReport:
    rep = RelationReport()
    for r in relations:
        if el.is_zero(relation_defect(r, X)):
            rep.held.append(r)
        else:
            rep.failed.append(r)
    return rep


# ---------------------------------------------------------------------------
# para-cyclic objects generated from d_0, s_0 and an invertible t

@dataclass(frozen=True, eq=False)
class GeneratedOperators:
    """Operator source built from d_0, s_0, t via ``d_i = t^i d_0 t^-i``, ``s_i = t^i s_0 t^-i``."""
    max_degree: int
    field: object
    dims: tuple
    faces: dict
    degeneracies: dict
    t: dict
    t_inv: dict

    def face(self, n, i):
        return self.faces[n, i]

    def degeneracy(self, n, i):
        return self.degeneracies[n, i]

    def cyclic(self, n):
        return self.t[n]

    def cyclic_inverse(self, n):
        return self.t_inv[n]

    def dim(self, n):
        return self.dims[n]


@dataclass
class ParacyclicVerdict:
    paracyclic: bool
    operators: GeneratedOperators
    report: RelationReport


def paracyclic_from_t(d0: dict, s0: dict, t: dict, N: int) -> ParacyclicVerdict:
    """Generate all faces/degeneracies from ``d_0``, ``s_0`` and ``t`` and check the relations.

    ``d0[n]: X_n -> X_{n-1}`` (n >= 1), ``s0[n]: X_n -> X_{n+1}`` (n < N),
    ``t[n]`` invertible (n <= N).
    """
    t_inv = {}
    for n in range(N + 1):
        if el.rank(t[n]) != t[n].nrows():
            raise ValueError(f"t is not invertible in degree {n}")
        t_inv[n] = el.inverse(t[n])
    faces, degens = {}, {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[n, i] = el.mat_power(t[n - 1], i) * d0[n] * el.mat_power(t_inv[n], i)
    for n in range(N):
        for i in range(n + 1):
            degens[n, i] = el.mat_power(t[n + 1], i) * s0[n] * el.mat_power(t_inv[n], i)
    dims = tuple(t[n].nrows() for n in range(N + 1))
    ops = GeneratedOperators(N, el.field_of(t[0]), dims, faces, degens, dict(t), t_inv)
    rep = check_relations(ops, relation_catalogue(N, with_inverse=True, with_order=False))
    return ParacyclicVerdict(not rep.failed, ops, rep)
