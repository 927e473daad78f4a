"""Regenerate the CLI golden outputs in tests/golden (run after an intended output change)."""

import io
import shlex
from pathlib import Path

from hopfcyc.cli import run

OUT = Path(__file__).resolve().parents[1] / "tests" / "golden"

# (file stem, command line, expected exit status)
CASES = [
    ("validate_kc2", "validate kc2", 0),
    ("validate_broken_counit", "validate broken_counit", 1),
    ("validate_broken_antipode", "validate broken_antipode", 1),
    ("integral_sweedler", "integral sweedler", 0),
    ("cofrobenius_sweedler", "cofrobenius sweedler", 0),
    ("hom_kc3", "hom kc3 k H", 0),
    ("stable_hom_f2c2_dual", "stable-hom f2c2_dual k k", 0),
    ("stable_equiv_f2c2_dual", "stable-equiv f2c2_dual k", 0),
    ("suspend_f2c2_dual", "suspend f2c2_dual k", 0),
    ("desuspend_sweedler", "desuspend sweedler k", 0),
    ("cylinder_sweedler", "cylinder sweedler k", 0),
    ("cocylinder_f2c2_dual", "cocylinder f2c2_dual k", 0),
    ("bar_kc2", "bar kc2 A --max-degree 1", 0),
    ("total_integral_kc2", "total-integral kc2 A", 0),
    ("cyclic_check_super_sweedler", "cyclic check super_sweedler M --max-degree 2", 0),
    ("cyclic_upgrade_bar", "cyclic upgrade cyclic_bar_qc2 M", 0),
    ("cyclic_upgrade_twisted", "cyclic upgrade twisted_qc2 M", 1),
    ("cyclic_upgrade_sign", "cyclic upgrade sign_qc2 M", 1),
    ("coapprox_mixed", "coapprox mixed_f2c2 M", 0),
    ("charmap_bar", "charmap cyclic_bar_qc2 A", 0),
    ("hc_ground_field", "hc ground_field --range 6", 0),
    ("hc_f2c2", "hc f2c2 A --range 3", 0),
    ("word_normalize", "word normalize 't^4@3 . s1@2 . d0@3' --tag lambda", 0),
    ("word_eval", "word eval 'd1@3 . t@3 . s0@2' cyclic_bar_qc2 M --tag lambda", 0),
    ("list", "list", 0),
]


def capture(cmdline: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(shlex.split(cmdline), out, err)
    return code, out.getvalue(), err.getvalue()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for stem, cmd, want in CASES:
        code, text, err = capture(cmd)
        if code != want:
            raise SystemExit(f"{cmd}: exit {code}, expected {want}\n{err}")
        (OUT / f"{stem}.txt").write_text(text)
        print(f"{stem}: exit {code}, {len(text.splitlines())} lines")


if __name__ == "__main__":
    main()
