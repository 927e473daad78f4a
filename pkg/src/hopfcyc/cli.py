"""
Command-line interface: ``hopfcyc COMMAND FILE [OBJECTS] [options]``.

FILE is a path to a definition file or the name of a bundled one (``kc2``,
``sweedler``, ``ground_field``, ...; see ``hopfcyc list``).  Reports start
with the header ``hopfcyc-report 1``, followed by human-readable lines and
a machine block between ``--- machine`` and ``--- end`` holding one
``key = JSON`` pair per line.

Exit status: 0 success (verdict true), 1 verdict false, 2 input error.

Word syntax (``word`` command): right-to-left composition of letters
``dI@N``, ``sI@N``, ``t@N``, ``t^K@N``, ``id@N`` separated by ``.``, e.g.
``d1@3 . t@3 . s0@2`` applies ``s0@2`` first.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import exactlin as el
from .exactlin import Field

REPORT_VERSION = 1


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# reports

class Report:
    def __init__(self, command: str):
        self.command = command
        self.lines: list[str] = []
        self.machine: dict = {}
        self.verdict: bool | None = None

    def put(self, key: str, value, label: str | None = None):
        self.machine[key] = value
        self.lines.append(f"{label or key}: {_human(value)}")

    def note(self, text: str):
        self.lines.append(text)

    def render(self) -> str:
        out = [f"hopfcyc-report {REPORT_VERSION}", f"command: {self.command}"]
        out += self.lines
        if self.verdict is not None:
            out.append(f"verdict: {'true' if self.verdict else 'false'}")
            self.machine["verdict"] = self.verdict
        out.append("--- machine")
        out += format_machine(self.machine)
        out.append("--- end")
        return "\n".join(out) + "\n"


def _human(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_human(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_human(x)}" for k, x in v.items()) + "}"
    return str(v)


def format_machine(data: dict) -> list[str]:
    return [f"{k} = {json.dumps(v, ensure_ascii=False, separators=(', ', ': '))}" for k, v in data.items()]


def parse_machine_block(text: str) -> dict:
    """Machine block of a report as an ordered dict."""
    lines = text.splitlines()
    try:
        start = lines.index("--- machine")
        stop = lines.index("--- end", start)
    except ValueError:
        raise ValueError("no machine block")
    out = {}
    for ln in lines[start + 1:stop]:
        key, _, val = ln.partition(" = ")
        out[key] = json.loads(val)
    return out


# ---------------------------------------------------------------------------
# inputs

def bundled_names() -> list[str]:
    return sorted(p.name[:-4] for p in (resources.files("hopfcyc") / "data").iterdir() if p.name.endswith(".alg"))


def read_definition_text(arg: str) -> tuple[str, str]:
    p = Path(arg)
    if p.is_file():
        return p.read_text(), arg
    name = arg[:-4] if arg.endswith(".alg") else arg
    name = Path(name).name
    res = resources.files("hopfcyc") / "data" / f"{name}.alg"
    if res.is_file():
        return res.read_text(), arg
    raise InputError(f"{arg}: no such file or bundled definition")


def load(arg: str, field_override: str | None = None):
    from .fileformat import parse_definitions
    text, src = read_definition_text(arg)
    if field_override:
        text = _override_field(text, field_override)
    return parse_definitions(text, src)


def _override_field(text: str, spec: str) -> str:
    spec = spec.strip()
    decl = "field rational" if spec in ("rational", "Q", "QQ") else f"field prime {spec}"
    lines = text.splitlines()
    for i, ln in enumerate(lines):
        if ln.split("#", 1)[0].strip().startswith("field"):
            lines[i] = decl
            break
    return "\n".join(lines) + "\n"


def _pick(defs, name: str | None, *kinds):
    if name:
        return name, defs.get(name, *kinds)
    names = defs.names(*kinds)
    if not names:
        raise InputError(f"no {' or '.join(kinds)} object in the file")
    return names[0], defs.objects[names[0]]


def _comb(labels, col: dict, F: Field) -> str:
    from .fileformat import _comb_str
    return _comb_str(F, col, [labels])


def _functional(labels, row, F: Field) -> str:
    col = {j: v for j, v in enumerate(row.tolist()[0]) if v != 0}
    parts = _comb([f"δ_{l}" for l in labels], col, F)
    return parts


def _matrix_rows(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.tolist()]


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args, rep: Report):
    from .amod import hopf_module_failures, validate_algebra, validate_module
    from .comod import is_colinear, validate_comodule
    from .hopf import validate_hopf
    from .hopf_cyclic import HopfBialgebraInComod, validate_bialgebra, validate_coefficients
    defs = load(args.file, args.field)
    rep.put("field", str(defs.field))
    ok_all = True
    results = {}
    for name in defs.order:
        kind, obj = defs.kinds[name], defs.objects[name]
        if kind == "hopf":
            r = validate_hopf(obj)
            fails = r.shape_errors + r.failures
        elif kind == "comodule":
            r = validate_comodule(obj)
            fails = r.shape_errors + r.failures
        elif kind == "algebra":
            r = validate_bialgebra(obj) if isinstance(obj, HopfBialgebraInComod) else validate_algebra(obj)
            fails = r.shape_errors + r.failures
        elif kind == "module":
            r = validate_module(obj)
            fails = r.shape_errors + r.failures
        elif kind == "stable":
            alg = defs.objects[[n for n in defs.names("algebra")
                                if getattr(defs.objects[n], "algebra", defs.objects[n]) is obj.algebra][0]]
            r = validate_coefficients(obj, alg if isinstance(alg, HopfBialgebraInComod) else None)
            fails = r.shape_errors + r.failures
        elif kind == "hopfmodule":
            fails = hopf_module_failures(obj)
        else:
            fails = [] if is_colinear(obj.matrix, obj.source, obj.target) else ["not colinear"]
        results[name] = fails
        ok_all = ok_all and not fails
        rep.note(f"{kind} {name}: {'ok' if not fails else 'FAILED ' + ', '.join(fails)}")
    rep.machine["failures"] = results
    rep.verdict = ok_all


def cmd_integral(args, rep: Report):
    from .hopf import cofrobenius_data, integral_space, is_right_integral
    defs = load(args.file, args.field)
    name, h = _pick(defs, args.object, "hopf")
    basis = integral_space(h)
    rep.put("hopf", name)
    rep.put("dimension", basis.nrows())
    if basis.nrows() != 1:
        rep.verdict = False
        return
    data = cofrobenius_data(h)
    rep.put("left_integral", _functional(h.labels, data.left, h.field))
    rep.put("right_integral", _functional(h.labels, data.right, h.field))
    rep.put("right_integral_identity", is_right_integral(h, data.right))
    rep.verdict = is_right_integral(h, data.right)


def cmd_cofrobenius(args, rep: Report):
    from .hopf import cofrobenius_data, is_cosemisimple
    defs = load(args.file, args.field)
    name, h = _pick(defs, args.object, "hopf")
    data = cofrobenius_data(h)
    rep.put("hopf", name)
    rep.put("cofrobenius", data.is_cofrobenius)
    rep.put("cosemisimple", is_cosemisimple(h))
    rep.put("x", h.labels[data.x_index])
    rep.put("right_integral_at_x", str(data.right_value(data.x)))
    rep.verdict = data.is_cofrobenius


def _two_comodules(args, defs):
    objs = args.objects
    if len(objs) != 2:
        raise InputError("two comodule names are required")
    return [(n, defs.comodule_of(n)) for n in objs]


def cmd_hom(args, rep: Report):
    from .comod import hom_colinear
    defs = load(args.file, args.field)
    (mn, M), (nn, N) = _two_comodules(args, defs)
    basis = hom_colinear(M, N)
    rep.put("source", mn)
    rep.put("target", nn)
    rep.put("dimension", len(basis))
    if args.verbose:
        rep.machine["basis"] = [_matrix_rows(b) for b in basis]
        for i, b in enumerate(basis):
            rep.note(f"basis[{i}] = {_matrix_rows(b)}")
    rep.verdict = True


def cmd_stable_hom(args, rep: Report):
    from .stable import stable_hom
    defs = load(args.file, args.field)
    (mn, M), (nn, N) = _two_comodules(args, defs)
    s = stable_hom(M, N)
    rep.put("source", mn)
    rep.put("target", nn)
    rep.put("hom_dimension", len(s.ambient))
    rep.put("stably_trivial_dimension", len(s.trivial))
    rep.put("stable_hom_dimension", s.quotient_dim)
    rep.verdict = True


def cmd_stable_equiv(args, rep: Report):
    from .stable import comparison_to_desuspended_suspension, is_stable_equivalence
    defs = load(args.file, args.field)
    name = args.objects[0] if args.objects else None
    if name and defs.kinds.get(name) == "map":
        f = defs.objects[name]
        rep.put("map", name)
    else:
        name = name or defs.names("comodule")[0]
        M = defs.comodule_of(name)
        f, _, _ = comparison_to_desuspended_suspension(M)
        rep.put("map", f"comparison {name} -> desuspension of suspension")
    res = is_stable_equivalence(f)
    rep.put("stable_equivalence", res.equivalence)
    rep.verdict = res.equivalence


def _shift(args, rep: Report, which: str):
    from .stable import desuspend, suspend
    defs = load(args.file, args.field)
    name = args.objects[0] if args.objects else defs.names("comodule")[0]
    M = defs.comodule_of(name)
    data = (suspend if which == "suspend" else desuspend)(M)
    seq = data.sequence
    rep.put("comodule", name)
    rep.put("dimension", M.dim)
    rep.put("shift_dimension", data.comodule.dim)
    rep.put("sequence_dimensions", [seq.left.dim, seq.middle.dim, seq.right.dim])
    rep.put("exact", seq.exact())
    rep.put("colinear", seq.colinear())
    if args.verbose:
        rep.machine["coaction"] = _matrix_rows(data.comodule.coaction)
        rep.note(f"coaction = {_matrix_rows(data.comodule.coaction)}")
    rep.verdict = seq.exact() and seq.colinear()


def _map_arg(args, defs):
    from .comod import ColinearMap
    name = args.objects[0] if args.objects else defs.names("comodule")[0]
    if defs.kinds.get(name) == "map":
        return name, defs.objects[name]
    M = defs.comodule_of(name)
    return f"id_{name}", ColinearMap(M, M, M.field.identity(M.dim))


def cmd_cylinder(args, rep: Report, co: bool = False):
    from .stable import mapping_cocylinder, mapping_cylinder
    defs = load(args.file, args.field)
    name, f = _map_arg(args, defs)
    F = f.source.field
    rep.put("map", name)
    if co:
        c = mapping_cocylinder(f)
        split = el.mat_equal(c.proj * c.section, F.identity(f.source.dim))
        rep.put("cocylinder_dimension", c.cocylinder.dim)
        dims = [c.sequence.left.dim, c.sequence.middle.dim, c.sequence.right.dim]
    else:
        c = mapping_cylinder(f)
        split = el.mat_equal(c.retraction * c.incl, F.identity(f.target.dim))
        rep.put("cylinder_dimension", c.cylinder.dim)
        dims = [c.sequence.left.dim, c.sequence.middle.dim, c.sequence.right.dim]
    rep.put("sequence_dimensions", dims)
    rep.put("exact", c.sequence.exact())
    rep.put("colinear", c.sequence.colinear())
    rep.put("split", split)
    rep.verdict = c.sequence.exact() and c.sequence.colinear() and split


def cmd_bar(args, rep: Report):
    from .amod import bar_stages, stage_is_injective
    from .fileformat import _algebra_part
    defs = load(args.file, args.field)
    name, a = _pick(defs, args.object, "algebra")
    a = _algebra_part(a)
    n = 3 if args.max_degree is None else args.max_degree
    stages = bar_stages(a, n)
    rep.put("algebra", name)
    ok = True
    for s in stages:
        inj = stage_is_injective(s)
        rep.note(f"stage {s.n}: dim {s.stage.dim}, subquotients {s.subquotient_dims}, "
                 f"complex {_human(s.complex_ok)}, split {_human(s.split_ok)}, injective {_human(inj)}")
        rep.machine[f"stage_{s.n}"] = {"dimension": s.stage.dim, "subquotients": s.subquotient_dims,
                                       "complex": s.complex_ok, "split": s.split_ok, "injective": inj}
        ok = ok and s.complex_ok and s.split_ok and inj and s.subquotient_dims == s.expected_dims
    rep.verdict = ok


def cmd_total_integral(args, rep: Report):
    from .amod import total_integral
    from .fileformat import _algebra_part
    defs = load(args.file, args.field)
    name, a = _pick(defs, args.object, "algebra")
    a = _algebra_part(a)
    phi = total_integral(a)
    rep.put("algebra", name)
    rep.put("exists", phi is not None)
    if phi is not None:
        rep.put("matrix", _matrix_rows(phi))
    rep.verdict = phi is not None


def _cyclic_inputs(args, defs):
    from .hopf_cyclic import HopfBialgebraInComod
    name = args.object
    mname, M = _pick(defs, name, "stable")
    B = [defs.objects[n] for n in defs.names("algebra")
         if getattr(defs.objects[n], "algebra", defs.objects[n]) is M.algebra][0]
    if not isinstance(B, HopfBialgebraInComod):
        B = M.algebra
    return mname, B, M


def cmd_cyclic(args, rep: Report):
    from .hopf_cyclic import HopfBialgebraInComod, build_T, cyclic_structure, verify_pseudo_para_cyclic
    defs = load(args.file, args.field)
    mname, B, M = _cyclic_inputs(args, defs)
    N = 3 if args.max_degree is None else args.max_degree
    T = build_T(B, M, N)
    rep.put("coefficients", mname)
    rep.put("max_degree", N)
    rep.put("dimensions", [T.dim(n) for n in range(N + 1)])
    if args.action == "build":
        from .comod import is_colinear
        col = all(is_colinear(m, T.comodules[s], T.comodules[t]) for _, s, t, m in T.operators())
        rep.put("operators_colinear", col)
        rep.verdict = col
        return
    if args.action == "check":
        r = verify_pseudo_para_cyclic(T)
        summary = {k: list(v) for k, v in r.relations.summary().items()}
        for fam, (held, failed) in r.relations.summary().items():
            rep.note(f"  {fam}: {held} held, {failed} failed")
        rep.machine["relations"] = summary
        rep.put("operators_colinear", all(r.colinear.values()))
        rep.put("pseudo_para_cyclic", r.pseudo_para)
        rep.put("para_cyclic", r.para)
        rep.put("cyclic", r.cyclic)
        if args.verbose:
            rep.machine["failed"] = r.failed_names()
            for f in r.failed_names():
                rep.note(f"  failed {f}")
        rep.verdict = r.pseudo_para and all(r.colinear.values())
        return
    if not isinstance(B, HopfBialgebraInComod):
        raise InputError("cyclic upgrade needs an algebra with comult, counit and antipode")
    up = cyclic_structure(T, B, M)
    rep.put("stable", up.stable)
    rep.put("inverse_ok", up.inverse_ok)
    rep.put("order_ok", up.order_ok)
    rep.put("upgraded", up.ok)
    rep.machine["failures"] = up.failures
    for f in up.failures:
        rep.note(f"  {f}")
    rep.verdict = up.ok


def cmd_coapprox(args, rep: Report):
    from .hopf_cyclic import build_T, coapproximation, verify_pseudo_para_cyclic
    defs = load(args.file, args.field)
    mname, B, M = _cyclic_inputs(args, defs)
    N = 2 if args.max_degree is None else args.max_degree
    T = build_T(B, M, N)
    Q = coapproximation(T)
    rep.put("coefficients", mname)
    rep.put("max_degree", N)
    rep.put("T_dimensions", [T.dim(n) for n in range(N + 1)])
    rep.put("Q_dimensions", Q.dims())
    rep.put("sweeps", Q.sweeps)
    rep.put("provisional_top_degree", N)
    ok = verify_pseudo_para_cyclic(Q.Q).cyclic
    rep.put("Q_cyclic", ok)
    rep.verdict = ok


def cmd_charmap(args, rep: Report):
    from .fileformat import _algebra_part
    from .hopf_cyclic import HopfBialgebraInComod, characteristic_map
    defs = load(args.file, args.field)
    name, B = _pick(defs, args.object, "algebra")
    if not isinstance(B, HopfBialgebraInComod):
        raise InputError(f"'{name}' needs a counit for the trivial coefficients")
    N = 2 if args.max_degree is None else args.max_degree
    cm = characteristic_map(B, N)
    rep.put("algebra", name)
    rep.put("max_degree", N)
    rep.put("source_dimensions", cm.source.dims())
    rep.put("target_dimensions", cm.target.dims())
    rep.put("commutes_on_T", cm.commutes_T)
    rep.put("commutes_on_Q", cm.commutes_Q)
    rep.put("colinear", cm.colinear)
    rep.put("coinvariant_source_dimensions", [cm.coinvariant_source[n].ncols() for n in range(N + 1)])
    rep.put("coinvariant_target_dimensions", [cm.coinvariant_target[n].ncols() for n in range(N + 1)])
    rep.put("commutes_on_coinvariants", cm.commutes_coinvariants)
    rep.verdict = cm.commutes_T and cm.commutes_Q and cm.colinear and cm.commutes_coinvariants


def cmd_hc(args, rep: Report):
    from .fileformat import _algebra_part
    from .homology import (cyclic_homology, cyclic_homology_bicomplex, hc0_oracle, hochschild_homology,
                           mixed_from_algebra, mixed_from_cyclic_module)
    defs = load(args.file, args.field)
    R = 4 if args.range is None else args.range
    if args.object and defs.kinds.get(args.object) == "stable":
        from .hopf_cyclic import build_T, coapproximation
        mname, B, M = _cyclic_inputs(args, defs)
        Q = coapproximation(build_T(B, M, R + 1))
        r = cyclic_homology(mixed_from_cyclic_module(Q.Q))
        rep.put("coefficients", mname)
        rep.put("range", R)
        rep.put("HC", r.reliable_dims())
        rep.verdict = True
        return
    name, a = _pick(defs, args.object, "algebra")
    a = _algebra_part(a)
    mixed = mixed_from_algebra(a, R + 1)
    r1 = cyclic_homology(mixed)
    r2 = cyclic_homology_bicomplex(a, R + 1)
    hh = hochschild_homology(mixed)
    rep.put("algebra", name)
    rep.put("range", R)
    rep.put("HC", r1.reliable_dims())
    rep.put("HH", hh.reliable_dims())
    rep.put("HC0_commutator_quotient", hc0_oracle(a))
    agree = r1.reliable_dims() == r2.reliable_dims()
    rep.put("paths_agree", agree)
    rep.put("mixed_identities", r1.certificate.ok)
    rep.verdict = agree and r1.certificate.ok


def cmd_word(args, rep: Report):
    from .cyclic_cat import evaluate, normalize, parse_word
    w = parse_word(args.word, args.tag)
    nf = normalize(w)
    rep.put("word", str(w))
    rep.put("tag", args.tag)
    rep.put("normal_form", str(nf))
    rep.put("source", w.source)
    rep.put("target", w.target)
    if args.action == "normalize":
        rep.verdict = True
        return
    if not args.file:
        raise InputError("word eval needs a definition file with stable coefficients")
    from .hopf_cyclic import HopfBialgebraInComod, build_T, cyclic_structure
    defs = load(args.file, args.field)
    mname, B, M = _cyclic_inputs(args, defs)
    N = max(6 if args.max_degree is None else args.max_degree, 0)
    needed = max([w.source, w.target] + [l.degree + (1 if l.kind == "s" else 0) for l in w.letters])
    T = build_T(B, M, max(needed, 0) if args.max_degree is None else N)
    X = T
    if isinstance(B, HopfBialgebraInComod):
        up = cyclic_structure(T, B, M)
        X = up.upgraded or T
    m1 = evaluate(w, X)
    m2 = evaluate(nf, X)
    agree = el.mat_equal(m1, m2)
    rep.put("coefficients", mname)
    rep.put("matrix_shape", list(el.shape(m1)))
    if args.verbose:
        rep.machine["matrix"] = _matrix_rows(m1)
    rep.put("normal_form_agrees", agree)
    rep.verdict = agree


def cmd_fmt(args, out):
    from .fileformat import format_text
    text, src = read_definition_text(args.file)
    canon = format_text(text, src)
    if args.check:
        return 0 if canon == text else 1
    out.write(canon)
    return 0


def cmd_list(args, rep: Report):
    rep.put("bundled", bundled_names())
    rep.verdict = True


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcyc", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, objects="none"):
        sp.add_argument("file")
        if objects == "one":
            sp.add_argument("object", nargs="?", default=None)
        elif objects == "many":
            sp.add_argument("objects", nargs="*")
        sp.add_argument("--field", default=None, help="reinterpret the tables over 'rational' or a prime")
        sp.add_argument("--max-degree", type=int, default=None)
        sp.add_argument("--range", type=int, default=None)
        sp.add_argument("--jobs", type=int, default=1,
                        help="accepted for scripting; degrees are computed sequentially")
        sp.add_argument("-v", "--verbose", action="store_true")
        return sp

    common(sub.add_parser("validate", help="check every object's axioms"))
    common(sub.add_parser("integral", help="integral space, left and right integrals"), "one")
    common(sub.add_parser("cofrobenius", help="coFrobenius data and the chosen x"), "one")
    common(sub.add_parser("hom", help="dimension of colinear maps M -> N"), "many")
    common(sub.add_parser("stable-hom", help="stable hom M -> N"), "many")
    common(sub.add_parser("stable-equiv", help="stable equivalence test for a map or the comparison map"), "many")
    common(sub.add_parser("suspend", help="suspension of a comodule"), "many")
    common(sub.add_parser("desuspend", help="desuspension of a comodule"), "many")
    common(sub.add_parser("cylinder", help="mapping cylinder of a map (identity of a comodule by default)"), "many")
    common(sub.add_parser("cocylinder", help="mapping cocylinder"), "many")
    common(sub.add_parser("bar", help="truncated bar stages C_0..C_n"), "one")
    common(sub.add_parser("total-integral", help="colinear unital map H -> A"), "one")
    cy = sub.add_parser("cyclic", help="T(A, M): build, check relations, upgrade to cyclic")
    cy.add_argument("action", choices=("build", "check", "upgrade"))
    common(cy, "one")
    common(sub.add_parser("coapprox", help="cyclic coapproximation Q of T(A, M)"), "one")
    common(sub.add_parser("charmap", help="characteristic map Q(A,k) -> Q(A,A)"), "one")
    common(sub.add_parser("hc", help="cyclic homology dimensions"), "one")
    wd = sub.add_parser("word", help="normalize or evaluate a cyclic-category word")
    wd.add_argument("action", choices=("normalize", "eval"))
    wd.add_argument("word")
    wd.add_argument("file", nargs="?", default=None)
    wd.add_argument("object", nargs="?", default=None)
    wd.add_argument("--tag", default="lambda_infty")
    wd.add_argument("--field", default=None)
    wd.add_argument("--max-degree", type=int, default=None)
    wd.add_argument("-v", "--verbose", action="store_true")
    ft = sub.add_parser("fmt", help="print the canonical form of a definition file")
    ft.add_argument("file")
    ft.add_argument("--check", action="store_true", help="exit 1 if the file is not canonical")
    sub.add_parser("list", help="list bundled definition files")
    return p


COMMANDS = {
    "validate": cmd_validate, "integral": cmd_integral, "cofrobenius": cmd_cofrobenius,
    "hom": cmd_hom, "stable-hom": cmd_stable_hom, "stable-equiv": cmd_stable_equiv,
    "suspend": lambda a, r: _shift(a, r, "suspend"), "desuspend": lambda a, r: _shift(a, r, "desuspend"),
    "cylinder": cmd_cylinder, "cocylinder": lambda a, r: cmd_cylinder(a, r, co=True),
    "bar": cmd_bar, "total-integral": cmd_total_integral, "cyclic": cmd_cyclic,
    "coapprox": cmd_coapprox, "charmap": cmd_charmap, "hc": cmd_hc, "word": cmd_word,
}


def _echo(argv: list[str]) -> str:
    return " ".join(argv)


def run(argv: list[str], out=None, err=None) -> int:
    from .cyclic_cat import DegreeOutOfRange, MalformedWord
    from .fileformat import DefinitionError
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fmt":
            return cmd_fmt(args, out)
        rep = Report(_echo(argv))
        if args.command == "list":
            cmd_list(args, rep)
        else:
            COMMANDS[args.command](args, rep)
    except (InputError, DefinitionError, MalformedWord, DegreeOutOfRange) as e:
        err.write(f"hopfcyc: error: {e}\n")
        return 2
    except ValueError as e:
        err.write(f"hopfcyc: error: {e}\n")
        return 2
    out.write(rep.render())
    return 0 if rep.verdict is not False else 1


def main(argv: list[str] | None = None) -> int:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
