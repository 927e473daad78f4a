"""Regenerate the bundled definition files in src/hopfcyc/data from the library constructors."""

from pathlib import Path

from hopfcyc.amod import algebra_from_hopf, ground_algebra, regular_hopf_module
from hopfcyc.comod import grouplike_comodule, regular_comodule, trivial_comodule
from hopfcyc.exactlin import GF, QQ
from hopfcyc.fileformat import definitions_from, serialize_definitions
from hopfcyc.hopf import HopfAlgebra, dual_hopf, group_algebra, sweedler, trivial_hopf
from hopfcyc.hopf_cyclic import (bialgebra_from_hopf, cyclic_bar_fixture, mixed_grouplike_fixture,
                                 sign_character_fixture, super_sweedler_fixture, twisted_group_fixture)

OUT = Path(__file__).resolve().parents[1] / "src" / "hopfcyc" / "data"


def renamed(h: HopfAlgebra, name: str) -> HopfAlgebra:
    return HopfAlgebra(name, h.field, h.space, h.mult, h.unit, h.comult, h.counit, h.antipode)


def hopf_file(h, name, extra_comodules=True, hopfmodule=False):
    h = renamed(h, name)
    items = [(name, "hopf", h)]
    if extra_comodules:
        items.append(("k", "comodule", trivial_comodule(h)))
        items.append(("H", "comodule", regular_comodule(h, "H")))
    items.append(("A", "algebra", algebra_from_hopf(h, "A")))
    if hopfmodule:
        items.append(("HH", "hopfmodule", regular_hopf_module(h)))
    return definitions_from(h.field, items)


def corrupt(h, name, **tables):
    F = h.field
    fields = dict(mult=h.mult, unit=h.unit, comult=h.comult, counit=h.counit, antipode=h.antipode)
    for key, (i, j, v) in tables.items():
        m = fields[key]
        m = m.__class__(m)
        m[i, j] = F._raw(v)
        fields[key] = m
    return HopfAlgebra(name, F, h.space, **fields)


def cyclic_file(B, M, hname, extra=()):
    return definitions_from(B.field, [(hname, "hopf", B.hopf), ("A", "algebra", B),
                                      ("M", "stable", M), *extra])


def build_files() -> dict:
    files = {}
    qc2, qc3 = group_algebra(2, QQ), group_algebra(3, QQ)
    f2c2, f3c3 = group_algebra(2, GF(2)), group_algebra(3, GF(3))
    sw = sweedler(QQ)
    files["kc2"] = hopf_file(qc2, "QC2", hopfmodule=True)
    files["kc3"] = hopf_file(qc3, "QC3")
    files["f2c2"] = hopf_file(f2c2, "F2C2", hopfmodule=True)
    files["f3c3"] = hopf_file(f3c3, "F3C3")
    files["kc2_dual"] = hopf_file(dual_hopf(qc2), "QC2dual")
    files["f2c2_dual"] = hopf_file(dual_hopf(f2c2), "F2C2dual", hopfmodule=True)
    files["sweedler"] = hopf_file(sw, "sweedler", hopfmodule=True)
    files["sweedler_dual"] = hopf_file(dual_hopf(sw), "sweedler_dual")
    k = renamed(trivial_hopf(QQ), "k")
    files["ground_field"] = definitions_from(QQ, [("k", "hopf", k),
                                                  ("A", "algebra", bialgebra_from_hopf(k, regular_comodule(k), "A"))])
    # seeded corruptions: each breaks a named identity
    files["broken_counit"] = definitions_from(QQ, [("QC2", "hopf", corrupt(qc2, "QC2", counit=(0, 1, 2)))])
    files["broken_unit"] = definitions_from(QQ, [("QC2", "hopf", corrupt(qc2, "QC2", unit=(1, 0, 1)))])
    files["broken_assoc"] = definitions_from(QQ, [("QC3", "hopf", corrupt(corrupt(qc3, "QC3", mult=(2, 4, 0)),
                                                                              "QC3", mult=(0, 4, 1)))])
    files["broken_coassoc"] = definitions_from(QQ, [("QC2", "hopf", corrupt(qc2, "QC2", comult=(1, 1, 1)))])
    files["broken_antipode"] = definitions_from(QQ, [("QC3", "hopf", corrupt(corrupt(qc3, "QC3", antipode=(1, 1, 1)),
                                                                                 "QC3", antipode=(2, 1, 0)))])
    # cyclic fixtures
    files["cyclic_bar_qc2"] = cyclic_file(*cyclic_bar_fixture(), "QC2")
    files["cyclic_bar_f2c2"] = cyclic_file(*cyclic_bar_fixture(GF(2)), "F2C2")
    files["super_sweedler"] = cyclic_file(*super_sweedler_fixture(), "QC2")
    files["twisted_qc2"] = cyclic_file(*twisted_group_fixture(), "QC2")
    files["sign_qc2"] = cyclic_file(*sign_character_fixture(), "QC2")
    files["mixed_f2c2"] = cyclic_file(*mixed_grouplike_fixture(GF(2)), "F2C2")
    return files


def main():
    files = build_files()
    OUT.mkdir(parents=True, exist_ok=True)
    for name, defs in files.items():
        (OUT / f"{name}.alg").write_text(serialize_definitions(defs))
        print("wrote", name)


if __name__ == "__main__":
    main()
