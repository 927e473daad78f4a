import importlib.util
from pathlib import Path

import pytest

from hopfcyc.cli import bundled_names, read_definition_text
from hopfcyc.fileformat import parse_definitions

ROOT = Path(__file__).resolve().parents[1]
CORRUPT = {
    "broken_counit": "counitality",
    "broken_unit": "unitality",
    "broken_assoc": "associativity",
    "broken_coassoc": "coassociativity",
    "broken_antipode": "antipode_left",
}
HOPF_FILES = ["kc2", "kc3", "f2c2", "f3c3", "kc2_dual", "f2c2_dual", "sweedler", "sweedler_dual",
              "ground_field"]


def load_bundled(name):
    text, src = read_definition_text(name)
    return parse_definitions(text, src)


def bundled_hopf(name):
    defs = load_bundled(name)
    return defs.objects[defs.names("hopf")[0]]


@pytest.fixture(scope="session")
def generator_module():
    spec = importlib.util.spec_from_file_location("make_bundled_data", ROOT / "tools" / "make_bundled_data.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


@pytest.fixture(scope="session")
def all_bundled():
    return bundled_names()


# acceptance criteria: number -> (title, passed, detail)
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
