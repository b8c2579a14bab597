"""Line-oriented instance files.

::

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

``morphism`` and ``mu`` may be omitted; mu then defaults to the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .characters import Character, trivial_character
from .cyclo import Cyclo, LiteralError, parse_literal
from .engine import Equation, Instance, diagnose_instance
from .semigroup import FiniteSemigroup, Morphism, MorphismKind

__all__ = [
    "InstanceFile",
    "ParseError",
    "RaggedTable",
    "UnknownElement",
    "load_instance",
    "parse_instance",
    "print_instance",
]

KEYS = ("elements", "table", "z0", "morphism", "mu", "equation")
FAMILIES = ("vanvleck", "dalembert")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected, self.found = line, col, expected, found
        msg = f"line {line}, column {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)


class RaggedTable(ParseError):
    def __init__(self, line: int, col: int, width: int, expected_width: int):
        self.width = width
        ParseError.__init__(self, line, col, f"{expected_width} entries in table row", f"{width} entries")


class UnknownElement(ParseError):
    def __init__(self, line: int, col: int, name: str):
        self.name = name
        ParseError.__init__(self, line, col, "a declared element name", name)


@dataclass(frozen=True)
class InstanceFile:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    z0: int
    morphism_kind: MorphismKind | None = None
    morphism: tuple[int, ...] | None = None
    mu: tuple[Cyclo, ...] | None = None
    equation: str = "vanvleck"
    name: str = ""

    def __eq__(self, other):
        if not isinstance(other, InstanceFile):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.table == other.table
            and self.z0 == other.z0
            and self.morphism_kind == other.morphism_kind
            and self.morphism == other.morphism
            and self.mu == other.mu
            and self.equation == other.equation
        )

    __hash__ = None

    def semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup(self.table, name=self.name, names=self.elements)

    def mu_character(self, s: FiniteSemigroup) -> Character:
        if self.mu is None:
            return trivial_character(s)
        return Character(self.mu)

    def equation_kind(self) -> Equation | None:
        if self.morphism_kind is None:
            return None
        return Equation.of(self.equation, self.morphism_kind)

    def diagnostics(self, s: FiniteSemigroup | None = None) -> list[tuple[str, str]]:
        s = s or self.semigroup()
        if self.morphism is None:
            return []
        try:
            mu = self.mu_character(s)
        except ValueError as exc:
            return [("mu-not-character", str(exc))]
        m = Morphism(self.morphism_kind, self.morphism)
        return diagnose_instance(s, m, self.z0, mu, self.equation_kind())

    def instance(self, s: FiniteSemigroup | None = None) -> Instance:
        if self.morphism is None:
            raise ValueError("this file declares no morphism")
        s = s or self.semigroup()
        m = Morphism(self.morphism_kind, self.morphism)
        return Instance(s, m, self.z0, self.mu_character(s), self.equation_kind())


def _tokens(text: str, lineno: int):
    """(col, token) pairs with 1-based columns; '#' starts a comment."""
    cut = text.find("#")
    if cut >= 0:
        text = text[:cut]
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((i + 1, text[i:j]))
        i = j
    return out


def parse_instance(text: str, name: str = "") -> InstanceFile:
    lines = text.splitlines()
    fields: dict[str, object] = {}
    elements: list[str] | None = None
    index: dict[str, int] = {}
    i = 0

    def lookup(lineno, col, tok):
        if tok not in index:
            raise UnknownElement(lineno, col, tok)
        return index[tok]

    while i < len(lines):
        lineno = i + 1
        toks = _tokens(lines[i], lineno)
        i += 1
        if not toks:
            continue
        col, head = toks[0]
        if not head.endswith(":") or head[:-1] not in KEYS:
            raise ParseError(lineno, col, "one of " + ", ".join(k + ":" for k in KEYS), head)
        key = head[:-1]
        if key in fields:
            raise ParseError(lineno, col, f"a single {key}: line", head)
        args = toks[1:]
        if key != "elements" and key != "equation" and elements is None:
            raise ParseError(lineno, col, "elements: before " + head, head)
        if key == "elements":
            if not args:
                raise ParseError(lineno, len(lines[lineno - 1]) + 1, "at least one element name")
            seen = set()
            for c, tok in args:
                if tok in seen:
                    raise ParseError(lineno, c, "distinct element names", tok)
                seen.add(tok)
            elements = [t for _, t in args]
            index = {t: k for k, t in enumerate(elements)}
            fields[key] = tuple(elements)
        elif key == "table":
            if args:
                raise ParseError(lineno, args[0][0], "end of line after table:", args[0][1])
            n = len(elements)
            rows = []
            while len(rows) < n:
                if i >= len(lines):
                    raise ParseError(i + 1, 1, f"{n - len(rows)} more table rows")
                rtoks = _tokens(lines[i], i + 1)
                i += 1
                if not rtoks:
                    continue
                if len(rtoks) != n:
                    raise RaggedTable(i, rtoks[0][0], len(rtoks), n)
                rows.append(tuple(lookup(i, c, t) for c, t in rtoks))
            fields[key] = tuple(rows)
        elif key == "z0":
            if len(args) != 1:
                raise ParseError(lineno, args[1][0] if len(args) > 1 else col, "exactly one element name after z0:")
            fields[key] = lookup(lineno, *args[0])
        elif key == "morphism":
            if not args or args[0][1] not in ("tau", "sigma"):
                c, found = args[0] if args else (col, "")
                raise ParseError(lineno, c, "tau or sigma", found)
            images = args[1:]
            if len(images) != len(elements):
                c = images[-1][0] if images else args[0][0]
                raise ParseError(lineno, c, f"{len(elements)} morphism images", f"{len(images)} images")
            fields["morphism_kind"] = MorphismKind(args[0][1])
            fields[key] = tuple(lookup(lineno, c, t) for c, t in images)
        elif key == "mu":
            if len(args) != len(elements):
                c = args[-1][0] if args else col
                raise ParseError(lineno, c, f"{len(elements)} mu values", f"{len(args)} values")
            vals = []
            for c, tok in args:
                try:
                    vals.append(parse_literal(tok))
                except LiteralError as exc:
                    raise ParseError(lineno, c + exc.pos, exc.expected, tok) from None
            fields[key] = tuple(vals)
        elif key == "equation":
            if len(args) != 1 or args[0][1] not in FAMILIES:
                c, found = args[0] if args else (col, "")
                raise ParseError(lineno, c, "vanvleck or dalembert", found)
            fields[key] = args[0][1]

    end = len(lines) + 1
    for req in ("elements", "table", "z0"):
        if req not in fields:
            raise ParseError(end, 1, f"a {req}: line")
    return InstanceFile(
        elements=fields["elements"],
        table=fields["table"],
        z0=fields["z0"],
        morphism_kind=fields.get("morphism_kind"),
        morphism=fields.get("morphism"),
        mu=fields.get("mu"),
        equation=fields.get("equation", "vanvleck"),
        name=name,
    )


def print_instance(f: InstanceFile) -> str:
    names = f.elements
    width = max(len(x) for x in names)
    out = [f"elements: {' '.join(names)}", "table:"]
    for row in f.table:
        out.append("  " + " ".join(names[v].ljust(width) for v in row).rstrip())
    out.append(f"z0: {names[f.z0]}")
    if f.morphism is not None:
        out.append(f"morphism: {f.morphism_kind.value} {' '.join(names[v] for v in f.morphism)}")
    if f.mu is not None:
        out.append(f"mu: {' '.join(v.literal() for v in f.mu)}")
    out.append(f"equation: {f.equation}")
    return "\n".join(out) + "\n"


def load_instance(path: str | Path) -> InstanceFile:
    p = Path(path)
    return parse_instance(p.read_text(), name=p.stem)


def instance_file_from(inst: Instance, *, include_mu: bool = True) -> InstanceFile:
    s = inst.semigroup
    return InstanceFile(
        elements=s.names,
        table=s.table,
        z0=inst.z0,
        morphism_kind=inst.morphism.kind,
        morphism=inst.morphism.map,
        mu=inst.mu.values if include_mu else None,
        equation="vanvleck" if inst.equation.is_vanvleck else "dalembert",
        name=s.name,
    )
