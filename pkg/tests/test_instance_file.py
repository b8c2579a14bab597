import pytest

from conftest import corpus_files
from veqlab.cyclo import root_of_unity
from veqlab.instance_file import (
    ParseError,
    RaggedTable,
    UnknownElement,
    instance_file_from,
    load_instance,
    parse_instance,
    print_instance,
)
from veqlab.semigroup import MorphismKind

Z4 = """\
# Z4 with inversion
elements: x0 x1 x2 x3
table:
  x0 x1 x2 x3
  x1 x2 x3 x0
  x2 x3 x0 x1
  x3 x0 x1 x2
z0: x1
morphism: tau x0 x3 x2 x1
mu: 1 1 1 1
equation: vanvleck
"""


def test_parse_z4():
    f = parse_instance(Z4, "z4")
    assert f.elements == ("x0", "x1", "x2", "x3")
    assert f.table[1] == (1, 2, 3, 0)
    assert f.z0 == 1
    assert f.morphism_kind is MorphismKind.ANTI_INVOLUTION
    assert f.morphism == (0, 3, 2, 1)
    assert f.diagnostics() == []
    inst = f.instance()
    assert inst.n == 4 and inst.semigroup.name == "z4"


def test_optional_lines():
    text = "\n".join(Z4.splitlines()[:8])
    f = parse_instance(text)
    assert f.morphism is None and f.mu is None
    assert f.equation == "vanvleck"
    with pytest.raises(ValueError):
        f.instance()


def test_mu_literals():
    text = Z4.replace("mu: 1 1 1 1", "mu: 1 w(4,1) -1 -1*w(4,1)").replace("tau x0 x3 x2 x1", "tau x0 x1 x2 x3")
    f = parse_instance(text)
    assert f.mu[1] == root_of_unity(4)
    codes = [c for c, _ in f.diagnostics()]
    assert codes == ["mu-not-admissible"]


def test_ragged_row():
    text = Z4.replace("  x1 x2 x3 x0\n", "  x1 x2 x3\n")
    with pytest.raises(RaggedTable) as exc:
        parse_instance(text)
    assert exc.value.line == 5


def test_unknown_element():
    text = Z4.replace("z0: x1", "z0: y7")
    with pytest.raises(UnknownElement) as exc:
        parse_instance(text)
    assert (exc.value.line, exc.value.col, exc.value.name) == (8, 5, "y7")


@pytest.mark.parametrize(
    "edit",
    [
        ("equation: vanvleck", "equation: cauchy"),
        ("morphism: tau", "morphism: rho"),
        ("mu: 1 1 1 1", "mu: 1 1 1 w(4)"),
        ("elements: x0 x1 x2 x3", "elements: x0 x1 x1 x3"),
        ("z0: x1", "zed: x1"),
    ],
)
def test_parse_errors(edit):
    with pytest.raises(ParseError):
        parse_instance(Z4.replace(*edit))


def test_missing_table():
    with pytest.raises(ParseError):
        parse_instance("elements: a\nz0: a\n")


def test_non_associative_file_reports():
    text = "elements: a b\ntable:\n  b a\n  a a\nz0: a\n"
    f = parse_instance(text)
    with pytest.raises(ValueError):
        f.semigroup()


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_round_trip(path):
    f = load_instance(path)
    again = parse_instance(print_instance(f))
    assert again == f
    assert print_instance(again) == print_instance(f)


def test_instance_file_from_instance():
    f = parse_instance(Z4)
    g = instance_file_from(f.instance())
    assert g == f
