"""Finite semigroups given by Cayley tables, and their (anti)involutions."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

__all__ = [
    "CheckReport",
    "FiniteSemigroup",
    "Morphism",
    "MorphismKind",
    "NotAPermutation",
    "NotAssociative",
    "OrderCapExceeded",
    "OutOfRangeEntry",
    "center",
    "check_associativity",
    "enumerate_morphisms",
    "find_identity",
    "make_cyclic_group",
    "make_dihedral",
    "make_direct_product",
    "make_left_zero",
    "make_null_semigroup",
    "make_quaternion",
    "validate_morphism",
]

DEFAULT_MORPHISM_CAP = 8


class OutOfRangeEntry(ValueError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.row, self.col = row, col
        super().__init__(f"table[{row}][{col}] = {value} is outside [0, {order})")


class NotAssociative(ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"table is not associative at (x, y, z) = {triple}")


class NotAPermutation(ValueError):
    pass


class OrderCapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        self.n, self.cap = n, cap
        super().__init__(f"order {n} exceeds the enumeration cap {cap}; supply the map explicitly")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive check; ``witness`` is the first failure in lexicographic order."""

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> CheckReport:
        return cls(True)


def _validate_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    rows = []
    for r, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {r} has length {len(row)}, expected {n}")
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise OutOfRangeEntry(r, c, v, n)
        rows.append(tuple(int(v) for v in row))
    return tuple(rows)


def check_associativity(table: Sequence[Sequence[int]]) -> CheckReport:
    t = _validate_table(table)
    n = len(t)
    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            return CheckReport(False, (x, y, z), f"({x}*{y})*{z} = {t[t[x][y]][z]} but {x}*({y}*{z}) = {t[x][t[y][z]]}")
    return CheckReport.passed()


def _identity_of(t) -> int | None:
    n = len(t)
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            return e
    return None


@dataclass(frozen=True)
class FiniteSemigroup:
    """A semigroup on the dense index set 0..n-1.

    ``identity`` is detected from the table when not supplied.  ``names`` are
    purely for display and parsing.
    """

    table: tuple[tuple[int, ...], ...]
    name: str = ""
    names: tuple[str, ...] | None = None
    identity: int | None = field(default=None)

    def __post_init__(self):
        t = _validate_table(self.table)
        object.__setattr__(self, "table", t)
        report = check_associativity(t)
        if not report:
            raise NotAssociative(report.witness)
        if self.identity is None:
            object.__setattr__(self, "identity", _identity_of(t))
        else:
            e = self.identity
            if not all(t[e][x] == x and t[x][e] == x for x in range(len(t))):
                raise ValueError(f"element {e} is not a two-sided identity")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(len(t))))
        elif len(self.names) != len(t) or len(set(self.names)) != len(t):
            raise ValueError("names must be distinct, one per element")
        else:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("semigroup powers need a positive exponent")
        acc = x
        for _ in range(k - 1):
            acc = self.table[acc][x]
        return acc

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in self.elements() for y in range(x))

    def inverses(self) -> tuple[int, ...] | None:
        """Inversion map if this is a group, else None."""
        e = self.identity
        if e is None:
            return None
        inv = []
        for x in self.elements():
            y = next((y for y in self.elements() if self.table[x][y] == e and self.table[y][x] == e), None)
            if y is None:
                return None
            inv.append(y)
        return tuple(inv)

    def is_group(self) -> bool:
        return self.inverses() is not None

    def index_of(self, name: str) -> int:
        return self.names.index(name)


def find_identity(s: FiniteSemigroup) -> int | None:
    return _identity_of(s.table)


def center(s: FiniteSemigroup) -> frozenset[int]:
    t = s.table
    return frozenset(z for z in s.elements() if all(t[z][x] == t[x][z] for x in s.elements()))


class MorphismKind(enum.Enum):
    ANTI_INVOLUTION = "tau"
    INVOLUTIVE_AUTOMORPHISM = "sigma"


@dataclass(frozen=True)
class Morphism:
    kind: MorphismKind
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]


def validate_morphism(s: FiniteSemigroup, m: Morphism) -> CheckReport:
    n = s.order
    if sorted(m.map) != list(range(n)):
        raise NotAPermutation(f"{list(m.map)} is not a permutation of 0..{n - 1}")
    f = m.map
    for x in range(n):
        if f[f[x]] != x:
            return CheckReport(False, (x,), f"map(map({x})) = {f[f[x]]}")
    t = s.table
    anti = m.kind is MorphismKind.ANTI_INVOLUTION
    for x, y in itertools.product(range(n), repeat=2):
        want = t[f[y]][f[x]] if anti else t[f[x]][f[y]]
        if f[t[x][y]] != want:
            law = "map(y)map(x)" if anti else "map(x)map(y)"
            return CheckReport(False, (x, y), f"map({x}*{y}) = {f[t[x][y]]} but {law} = {want}")
    return CheckReport.passed()


def _involutions(n: int) -> Iterator[list[int]]:
    perm = [-1] * n

    def rec(i):
        while i < n and perm[i] != -1:
            i += 1
        if i == n:
            yield list(perm)
            return
        perm[i] = i
        yield from rec(i + 1)
        for j in range(i + 1, n):
            if perm[j] == -1:
                perm[i], perm[j] = j, i
                yield from rec(i + 1)
                perm[j] = -1
        perm[i] = -1

    yield from rec(0)


def enumerate_morphisms(s: FiniteSemigroup, kind: MorphismKind, cap: int = DEFAULT_MORPHISM_CAP) -> list[Morphism]:
    """All morphisms of ``kind`` on ``s``, in lexicographic order of their maps."""
    if s.order > cap:
        raise OrderCapExceeded(s.order, cap)
    found = []
    for perm in _involutions(s.order):
        m = Morphism(kind, tuple(perm))
        if validate_morphism(s, m):
            found.append(m)
    found.sort(key=lambda m: m.map)
    return found


# -- builders ---------------------------------------------------------------


def make_cyclic_group(n: int) -> FiniteSemigroup:
    if n < 1:
        raise ValueError("n must be positive")
    table = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    return FiniteSemigroup(table, name=f"Z{n}")


def make_direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    """Elements are pairs (i, j) encoded as i * |b| + j."""
    nb = b.order
    n = a.order * nb
    table = tuple(
        tuple(a.table[x // nb][y // nb] * nb + b.table[x % nb][y % nb] for y in range(n)) for x in range(n)
    )
    names = tuple(f"({p},{q})" for p in a.names for q in b.names)
    return FiniteSemigroup(table, name=f"{a.name}x{b.name}", names=names)


def make_dihedral(m: int) -> FiniteSemigroup:
    """Dihedral group of order 2m; element f*m + k stands for s^f r^k."""
    if m < 1:
        raise ValueError("m must be positive")

    def mul(x, y):
        f1, k1 = divmod(x, m)
        f2, k2 = divmod(y, m)
        k = (-k1 if f2 else k1) + k2
        return ((f1 + f2) % 2) * m + k % m

    n = 2 * m
    table = tuple(tuple(mul(x, y) for y in range(n)) for x in range(n))
    rot = ["e"] + [f"r{k}" if k > 1 else "r" for k in range(1, m)]
    names = tuple(rot + ["s" + (r if r != "e" else "") for r in rot])
    return FiniteSemigroup(table, name=f"D{m}", names=names)


def make_quaternion() -> FiniteSemigroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k."""
    units = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    basic = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    names = tuple(("" if s > 0 else "-") + u for s, u in elems)
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        sgn, u = basic[(a[1], b[1])]
        return index[(a[0] * b[0] * sgn, u)]

    table = tuple(tuple(mul(a, b) for b in elems) for a in elems)
    return FiniteSemigroup(table, name="Q8", names=names)


def make_left_zero(n: int) -> FiniteSemigroup:
    table = tuple(tuple(x for _ in range(n)) for x in range(n))
    return FiniteSemigroup(table, name=f"L{n}")


def make_null_semigroup() -> FiniteSemigroup:
    """{a, 0} with every product equal to 0; it has no identity."""
    return FiniteSemigroup(((1, 1), (1, 1)), name="N2", names=("a", "0"))
