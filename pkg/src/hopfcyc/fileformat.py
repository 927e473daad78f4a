"""
Line-oriented definition files (``.alg``).

Grammar (one statement per line, ``#`` starts a comment)::

    file      := "field" ("rational" | "prime" P) block*
    block     := header NL line* "end"
    header    := "hopf" NAME
               | ("comodule" | "hopfmodule") NAME "over" HOPF
               | "algebra" NAME "over" HOPF
               | ("module" | "stable") NAME "over" ALGEBRA
               | "map" NAME "from" OBJECT "to" OBJECT
    line      := "basis" LABEL+
               | "unit" "=" comb
               | KEY LABEL+ "=" comb
    comb      := "0" | term (("+" | "-") term)*
    term      := ["-"] [COEF] LABEL*

A term carries as many labels as the table has output factors, e.g.
``comult x = x e + g x`` or ``counit g = 1``.  Coefficients are integers
or fractions ``p/q``; over ``F_p`` they are reduced mod p.  Tables are
sparse: omitted entries are zero.

Keys per block: ``hopf``: mult, comult, counit, antipode (and unit);
``comodule``: coaction; ``algebra``: coaction, mult, unit and optionally
comult, counit, antipode (a bialgebra in comodules); ``module``: coaction,
action; ``stable``: coaction, action, acoaction; ``hopfmodule``: action,
coaction; ``map``: send.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import exactlin as el
from .amod import AModObject, ComoduleAlgebra, HopfModule
from .comod import Comodule, ColinearMap
from .exactlin import Field, VectorSpace
from .hopf import HopfAlgebra
from .hopf_cyclic import HopfBialgebraInComod, StableModComod


class DefinitionError(ValueError):
    """Parse or semantic error, with ``file:line:col`` when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 source: str = "<input>"):
        self.line, self.col, self.source = line, col, source
        where = f"{source}:{line}:{col}: " if line is not None else f"{source}: "
        super().__init__(where + message)


_COEF = re.compile(r"^-?\d+(/\d+)?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_*'^.-]*$")
KINDS = ("hopf", "comodule", "algebra", "module", "stable", "hopfmodule", "map")


@dataclass
class Definitions:
    field: Field
    objects: dict = field(default_factory=dict)      # name -> object
    kinds: dict = field(default_factory=dict)        # name -> kind
    order: list = field(default_factory=list)

    def add(self, name: str, kind: str, obj):
        self.objects[name] = obj
        self.kinds[name] = kind
        self.order.append(name)

    def get(self, name: str, *kinds):
        if name not in self.objects:
            raise DefinitionError(f"unknown object '{name}'")
        if kinds and self.kinds[name] not in kinds:
            raise DefinitionError(f"'{name}' is a {self.kinds[name]}, expected {' or '.join(kinds)}")
        return self.objects[name]

    def names(self, *kinds) -> list[str]:
        return [n for n in self.order if not kinds or self.kinds[n] in kinds]

    def comodule_of(self, name: str) -> Comodule:
        obj = self.get(name)
        kind = self.kinds[name]
        if kind == "comodule":
            return obj
        if kind == "algebra":
            return _algebra_part(obj).comodule
        if kind in ("module", "stable"):
            return obj.comodule
        if kind == "hopfmodule":
            return Comodule(obj.name, obj.hopf, obj.space, obj.coaction)
        raise DefinitionError(f"'{name}' has no comodule structure")


def _algebra_part(obj) -> ComoduleAlgebra:
    return obj.algebra if isinstance(obj, HopfBialgebraInComod) else obj


# ---------------------------------------------------------------------------
# tokenising

@dataclass
class _Line:
    number: int
    text: str
    tokens: list        # (token, column)


def _tokenize(text: str) -> list[_Line]:
    out = []
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            out.append(_Line(k, raw, toks))
    return out


class _Parser:
    def __init__(self, text: str, source: str):
        self.lines = _tokenize(text)
        self.source = source
        self.pos = 0

    def error(self, msg, line: _Line | None = None, col: int | None = None):
        if line is None:
            return DefinitionError(msg, None, None, self.source)
        return DefinitionError(msg, line.number, col if col is not None else line.tokens[0][1], self.source)

    def parse(self) -> Definitions:
        if not self.lines:
            raise self.error("empty definition file")
        first = self.lines[0]
        words = [t for t, _ in first.tokens]
        if words[0] != "field":
            raise self.error("first statement must be 'field rational' or 'field prime P'", first)
        if words[1:] == ["rational"]:
            F = Field()
        elif len(words) == 3 and words[1] == "prime" and words[2].isdigit():
            try:
                F = Field(int(words[2]))
            except ValueError as e:
                raise self.error(str(e), first, first.tokens[2][1])
        else:
            raise self.error("malformed field declaration", first)
        defs = Definitions(F)
        self.pos = 1
        while self.pos < len(self.lines):
            self._block(defs)
        return defs

    # -- blocks ---------------------------------------------------------
    def _block(self, defs: Definitions):
        head = self.lines[self.pos]
        words = [t for t, _ in head.tokens]
        kind = words[0]
        if kind not in KINDS:
            raise self.error(f"expected a block header ({', '.join(KINDS)}), got '{kind}'", head)
        if len(words) < 2 or not _NAME.match(words[1]):
            raise self.error("missing or invalid object name", head, head.tokens[min(1, len(words) - 1)][1])
        name = words[1]
        if name in defs.objects:
            raise self.error(f"duplicate object name '{name}'", head, head.tokens[1][1])
        refs = {}
        rest = words[2:]
        if kind == "hopf":
            if rest:
                raise self.error("unexpected tokens after hopf name", head, head.tokens[2][1])
        elif kind == "map":
            if len(rest) != 4 or rest[0] != "from" or rest[2] != "to":
                raise self.error("map header is 'map NAME from X to Y'", head)
            refs = {"from": (rest[1], head.tokens[3][1]), "to": (rest[3], head.tokens[5][1])}
        else:
            if len(rest) != 2 or rest[0] != "over":
                raise self.error(f"{kind} header is '{kind} NAME over BASE'", head)
            refs = {"over": (rest[1], head.tokens[3][1])}
        for key, (ref, col) in refs.items():
            if ref not in defs.objects:
                raise self.error(f"unknown object '{ref}'", head, col)
        body = []
        self.pos += 1
        while True:
            if self.pos >= len(self.lines):
                raise self.error(f"block '{name}' is not closed with 'end'", head)
            ln = self.lines[self.pos]
            self.pos += 1
            if ln.tokens[0][0] == "end":
                if len(ln.tokens) > 1:
                    raise self.error("unexpected tokens after 'end'", ln, ln.tokens[1][1])
                break
            body.append(ln)
        build = getattr(self, f"_build_{kind}")
        defs.add(name, kind, build(defs, name, refs, body, head))

    # -- table lines ----------------------------------------------------
    def _basis(self, body, head):
        lines = [ln for ln in body if ln.tokens[0][0] == "basis"]
        if len(lines) != 1:
            raise self.error("exactly one 'basis' line is required", head)
        labels = [t for t, _ in lines[0].tokens[1:]]
        for t, c in lines[0].tokens[1:]:
            if not _NAME.match(t):
                raise self.error(f"invalid basis label '{t}'", lines[0], c)
        if len(set(labels)) != len(labels):
            raise self.error("repeated basis label", lines[0])
        if not labels:
            raise self.error("empty basis", lines[0])
        return tuple(labels)

    def _entries(self, F, body, key, in_spaces, out_spaces, allowed):
        """Collect the table ``key``: returns ``{(out_index, in_index): coef}``."""
        out = {}
        in_dims = [len(s) for s in in_spaces]
        out_dims = [len(s) for s in out_spaces]
        for ln in body:
            k = ln.tokens[0][0]
            if k == "basis":
                continue
            if k not in allowed:
                raise self.error(f"unknown key '{k}' (expected one of: basis, {', '.join(allowed)})", ln)
            if k != key:
                continue
            toks = ln.tokens[1:]
            eq = [i for i, (t, _) in enumerate(toks) if t == "="]
            if not eq:
                raise self.error("missing '='", ln)
            lhs, rhs = toks[:eq[0]], toks[eq[0] + 1:]
            if len(lhs) != len(in_spaces):
                raise self.error(f"'{key}' takes {len(in_spaces)} input label(s)", ln)
            idx = 0
            for (t, c), labels, d in zip(lhs, in_spaces, in_dims):
                if t not in labels:
                    raise self.error(f"unknown label '{t}'", ln, c)
                idx = idx * d + labels.index(t)
            for oi, coef in self._comb(F, rhs, out_spaces, ln).items():
                if (oi, idx) in out:
                    raise self.error(f"duplicate entry for '{key}'", ln)
                out[oi, idx] = coef
        return out, _prod(out_dims), _prod(in_dims)

    def _comb(self, F, toks, spaces, ln) -> dict:
        if not toks:
            raise self.error("empty right-hand side", ln)
        if len(toks) == 1 and toks[0][0] == "0":
            return {}
        out: dict = {}
        sign = 1
        term: list = []
        terms = []
        for t, c in toks + [("+", None)]:
            if t in ("+", "-"):
                if term:
                    terms.append((sign, term))
                    term = []
                    sign = 1 if t == "+" else -1
                elif t == "-":
                    sign = -sign
                elif c is not None:
                    raise self.error("dangling '+'", ln, c)
                continue
            term.append((t, c))
        for sign, term in terms:
            coef = F(sign)
            labels = term
            if _COEF.match(term[0][0]):
                try:
                    coef = coef * F(term[0][0])
                except ZeroDivisionError as e:
                    raise self.error(str(e), ln, term[0][1])
                labels = term[1:]
            if len(labels) != len(spaces):
                col = term[0][1]
                raise self.error(f"term needs {len(spaces)} label(s), got {len(labels)}", ln, col)
            idx = 0
            for (t, c), sp in zip(labels, spaces):
                if t not in sp:
                    raise self.error(f"unknown label '{t}'", ln, c)
                idx = idx * len(sp) + sp.index(t)
            out[idx] = out.get(idx, F(0)) + coef
        return {k: v for k, v in out.items() if v != 0}

    def _table(self, F, body, key, ins, outs, allowed, required=True, head=None):
        data, r, c = self._entries(F, body, key, ins, outs, allowed)
        if required and not any(ln.tokens[0][0] == key for ln in body) and key != "unit":
            raise self.error(f"missing '{key}' table", head)
        return F.from_sparse(r, c, data)

    def _unit(self, F, body, labels, head):
        lines = [ln for ln in body if ln.tokens[0][0] == "unit"]
        if len(lines) != 1:
            raise self.error("exactly one 'unit = …' line is required", head)
        ln = lines[0]
        if len(ln.tokens) < 3 or ln.tokens[1][0] != "=":
            raise self.error("unit line is 'unit = COMBINATION'", ln)
        vals = self._comb(F, ln.tokens[2:], [labels], ln)
        return F.from_sparse(len(labels), 1, {(i, 0): v for i, v in vals.items()})

    # -- builders -------------------------------------------------------
    def _build_hopf(self, defs, name, refs, body, head):
        F = defs.field
        L = self._basis(body, head)
        allowed = ("unit", "mult", "comult", "counit", "antipode")
        mult = self._table(F, body, "mult", [L, L], [L], allowed, head=head)
        comult = self._table(F, body, "comult", [L], [L, L], allowed, head=head)
        counit = self._table(F, body, "counit", [L], [], allowed, head=head)
        antipode = self._table(F, body, "antipode", [L], [L], allowed, head=head)
        unit = self._unit(F, body, L, head)
        return HopfAlgebra(name, F, VectorSpace(len(L), L), mult, unit, comult, counit, antipode)

    def _comodule_part(self, defs, name, h, L, body, allowed, head):
        co = self._table(defs.field, body, "coaction", [L], [L, h.labels], allowed, head=head)
        return Comodule(name, h, VectorSpace(len(L), L), co)

    def _build_comodule(self, defs, name, refs, body, head):
        h = defs.get(refs["over"][0], "hopf")
        L = self._basis(body, head)
        return self._comodule_part(defs, name, h, L, body, ("coaction",), head)

    def _build_algebra(self, defs, name, refs, body, head):
        F = defs.field
        h = defs.get(refs["over"][0], "hopf")
        L = self._basis(body, head)
        allowed = ("coaction", "unit", "mult", "comult", "counit", "antipode")
        C = self._comodule_part(defs, name, h, L, body, allowed, head)
        mult = self._table(F, body, "mult", [L, L], [L], allowed, head=head)
        unit = self._unit(F, body, L, head)
        a = ComoduleAlgebra(name, C, mult, unit)
        keys = {ln.tokens[0][0] for ln in body}
        if "comult" in keys or "counit" in keys:
            comult = self._table(F, body, "comult", [L], [L, L], allowed, head=head)
            counit = self._table(F, body, "counit", [L], [], allowed, head=head)
            S = self._table(F, body, "antipode", [L], [L], allowed, head=head) if "antipode" in keys else None
            return HopfBialgebraInComod(a, comult, counit, S)
        if "antipode" in keys:
            raise self.error("an antipode needs comult and counit tables", head)
        return a

    def _build_module(self, defs, name, refs, body, head):
        a = _algebra_part(defs.get(refs["over"][0], "algebra"))
        L = self._basis(body, head)
        allowed = ("coaction", "action")
        C = self._comodule_part(defs, name, a.hopf, L, body, allowed, head)
        act = self._table(defs.field, body, "action", [a.comodule.space.labels, L], [L], allowed, head=head)
        return AModObject(name, a, C, act)

    def _build_stable(self, defs, name, refs, body, head):
        a = _algebra_part(defs.get(refs["over"][0], "algebra"))
        L = self._basis(body, head)
        AL = a.comodule.space.labels
        allowed = ("coaction", "action", "acoaction")
        C = self._comodule_part(defs, name, a.hopf, L, body, allowed, head)
        act = self._table(defs.field, body, "action", [AL, L], [L], allowed, head=head)
        aco = self._table(defs.field, body, "acoaction", [L], [AL, L], allowed, head=head)
        return StableModComod(name, a, C, act, aco)

    def _build_hopfmodule(self, defs, name, refs, body, head):
        h = defs.get(refs["over"][0], "hopf")
        L = self._basis(body, head)
        allowed = ("action", "coaction")
        act = self._table(defs.field, body, "action", [h.labels, L], [L], allowed, head=head)
        co = self._table(defs.field, body, "coaction", [L], [L, h.labels], allowed, head=head)
        return HopfModule(name, h, VectorSpace(len(L), L), act, co)

    def _build_map(self, defs, name, refs, body, head):
        X = defs.comodule_of(refs["from"][0])
        Y = defs.comodule_of(refs["to"][0])
        m = self._table(defs.field, body, "send", [X.space.labels], [Y.space.labels], ("send",),
                        required=False, head=head)
        return ColinearMap(X, Y, m)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def parse_definitions(text: str, source: str = "<input>") -> Definitions:
    return _Parser(text, source).parse()


# ---------------------------------------------------------------------------
# canonical serialisation

def _coef_str(F: Field, v) -> str:
    return str(int(v)) if not F.is_rational else str(v)


def _comb_str(F: Field, col: dict, spaces) -> str:
    """``col``: {flat output index: coefficient}."""
    if not col:
        return "0"
    parts = []
    for k, idx in enumerate(sorted(col)):
        v = col[idx]
        labels = []
        rem = idx
        for sp in reversed(spaces):
            labels.append(sp[rem % len(sp)])
            rem //= len(sp)
        labels.reverse()
        neg = F.is_rational and v < 0
        mag = -v if neg else v
        cs = _coef_str(F, mag)
        body = " ".join(labels)
        if cs == "1" and labels:
            term = body
        else:
            term = f"{cs} {body}".strip()
        if k == 0:
            parts.append(f"- {term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


def _table_lines(F: Field, key: str, m, ins, outs) -> list[str]:
    cols = el.columns_sparse(m)
    lines = []
    for j, col in enumerate(cols):
        if not col:
            continue
        labels = []
        rem = j
        for sp in reversed(ins):
            labels.append(sp[rem % len(sp)])
            rem //= len(sp)
        labels.reverse()
        lines.append(f"  {key} {' '.join(labels)} = {_comb_str(F, col, outs)}")
    return lines


def _unit_line(F, unit, L) -> str:
    col = el.columns_sparse(unit)[0]
    return f"  unit = {_comb_str(F, col, [L])}"


def serialize_definitions(defs: Definitions) -> str:
    F = defs.field
    out = [f"field {F}"]
    for name in defs.order:
        kind, obj = defs.kinds[name], defs.objects[name]
        out.append("")
        if kind == "hopf":
            L = obj.labels
            out.append(f"hopf {name}")
            out.append("  basis " + " ".join(L))
            out.append(_unit_line(F, obj.unit, L))
            out += _table_lines(F, "mult", obj.mult, [L, L], [L])
            out += _table_lines(F, "comult", obj.comult, [L], [L, L])
            out += _table_lines(F, "counit", obj.counit, [L], [])
            out += _table_lines(F, "antipode", obj.antipode, [L], [L])
        elif kind == "comodule":
            L = obj.space.labels
            out.append(f"comodule {name} over {_hopf_name(defs, obj.hopf)}")
            out.append("  basis " + " ".join(L))
            out += _table_lines(F, "coaction", obj.coaction, [L], [L, obj.hopf.labels])
        elif kind == "algebra":
            a = _algebra_part(obj)
            L = a.comodule.space.labels
            out.append(f"algebra {name} over {_hopf_name(defs, a.hopf)}")
            out.append("  basis " + " ".join(L))
            out += _table_lines(F, "coaction", a.comodule.coaction, [L], [L, a.hopf.labels])
            out.append(_unit_line(F, a.unit, L))
            out += _table_lines(F, "mult", a.mult, [L, L], [L])
            if isinstance(obj, HopfBialgebraInComod):
                out += _table_lines(F, "comult", obj.comult, [L], [L, L])
                out += _table_lines(F, "counit", obj.counit, [L], [])
                if obj.antipode is not None:
                    out += _table_lines(F, "antipode", obj.antipode, [L], [L])
        elif kind in ("module", "stable"):
            L = obj.comodule.space.labels
            AL = obj.algebra.comodule.space.labels
            out.append(f"{kind} {name} over {_algebra_name(defs, obj.algebra)}")
            out.append("  basis " + " ".join(L))
            out += _table_lines(F, "coaction", obj.comodule.coaction, [L], [L, obj.algebra.hopf.labels])
            out += _table_lines(F, "action", obj.action, [AL, L], [L])
            if kind == "stable":
                out += _table_lines(F, "acoaction", obj.acoaction, [L], [AL, L])
        elif kind == "hopfmodule":
            L = obj.space.labels
            out.append(f"hopfmodule {name} over {_hopf_name(defs, obj.hopf)}")
            out.append("  basis " + " ".join(L))
            out += _table_lines(F, "action", obj.action, [obj.hopf.labels, L], [L])
            out += _table_lines(F, "coaction", obj.coaction, [L], [L, obj.hopf.labels])
        elif kind == "map":
            out.append(f"map {name} from {_object_name(defs, obj.source)} to {_object_name(defs, obj.target)}")
            out += _table_lines(F, "send", obj.matrix, [obj.source.space.labels], [obj.target.space.labels])
        out.append("end")
    return "\n".join(out) + "\n"


def _hopf_name(defs: Definitions, h) -> str:
    for n in defs.names("hopf"):
        if defs.objects[n] is h:
            return n
    for n in defs.names("hopf"):
        if defs.objects[n].same_as(h):
            return n
    raise DefinitionError(f"Hopf algebra '{h.name}' is not defined in this file")


def _algebra_name(defs: Definitions, a) -> str:
    for n in defs.names("algebra"):
        if _algebra_part(defs.objects[n]) is a:
            return n
    raise DefinitionError(f"algebra '{a.name}' is not defined in this file")


def _object_name(defs: Definitions, C: Comodule) -> str:
    for n in defs.order:
        if defs.kinds[n] == "map":
            continue
        try:
            if defs.comodule_of(n) is C or (defs.kinds[n] != "hopfmodule" and defs.comodule_of(n).name == C.name
                                            and defs.comodule_of(n).coaction == C.coaction):
                return n
        except DefinitionError:
            continue
    raise DefinitionError(f"comodule '{C.name}' is not defined in this file")


def format_text(text: str, source: str = "<input>") -> str:
    """Canonical form of a definition file: parse, then serialise."""
    return serialize_definitions(parse_definitions(text, source))


# ---------------------------------------------------------------------------
# building files from library objects

def definitions_from(F: Field, items) -> Definitions:
    """``items``: iterable of (name, kind, object) in dependency order."""
    defs = Definitions(F)
    for name, kind, obj in items:
        defs.add(name, kind, obj)
    return defs
