from __future__ import annotations

import re
from pathlib import Path

import pytest

from veqlab.characters import Character, trivial_character
from veqlab.cyclo import Cyclo
from veqlab.engine import Equation, Instance
from veqlab.instance_file import load_instance
from veqlab.semigroup import Morphism, MorphismKind, make_cyclic_group

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"


def cyclic_instance(n, z0, mu=None, sigma=False):
    """Z_n with x -> -x as tau (or sigma)."""
    s = make_cyclic_group(n)
    kind = MorphismKind.INVOLUTIVE_AUTOMORPHISM if sigma else MorphismKind.ANTI_INVOLUTION
    m = Morphism(kind, tuple((-x) % n for x in range(n)))
    if mu is None:
        mu_char = trivial_character(s)
    else:
        mu_char = Character(tuple(Cyclo.from_rational(v) if not isinstance(v, Cyclo) else v for v in mu))
    eq = Equation.VANVLECK_SIGMA if sigma else Equation.VANVLECK_TAU
    return Instance(s, m, z0, mu_char, eq)


def corpus_files():
    return sorted(CORPUS.glob("*.veq"))


def corpus_instances(*, vanvleck_only=True, sigma=None):
    """(name, Instance) for every corpus file that declares a valid instance."""
    out = []
    for path in corpus_files():
        f = load_instance(path)
        if f.morphism is None or f.diagnostics():
            continue
        inst = f.instance()
        if vanvleck_only and not inst.equation.is_vanvleck:
            continue
        if sigma is not None and inst.equation.is_sigma != sigma:
            continue
        out.append((path.stem, inst))
    return out


@pytest.fixture
def z4():
    return cyclic_instance(4, 1)


# -- acceptance summary ------------------------------------------------------------

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_acceptance: dict[int, list[tuple[str, bool]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    m = _CRITERION.match(name)
    if m:
        _acceptance.setdefault(int(m.group(1)), []).append((name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        parts = _acceptance[num]
        ok = all(p for _, p in parts)
        failed = [n for n, p in parts if not p]
        tail = f"  (failed: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}{tail}")
