"""Multiplicative functions on finite semigroups.

On a finite semigroup every power sequence x, x^2, ... is eventually periodic
with some index i and period p, so a multiplicative chi satisfies
chi(x)^i = chi(x)^(i+p): chi(x) is 0 or a p-th root of unity.  Enumeration
therefore ranges over a finite, exactly representable candidate set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from .cyclo import Cyclo, root_of_unity
from .semigroup import CheckReport, FiniteSemigroup, Morphism

__all__ = [
    "Character",
    "ElementProfile",
    "admissible_mus",
    "check_multiplicative",
    "element_profiles",
    "enumerate_characters",
    "make_character",
    "trivial_character",
    "twist",
    "values_key",
]


@dataclass(frozen=True)
class ElementProfile:
    element: int
    index: int
    period: int


def element_profiles(s: FiniteSemigroup) -> list[ElementProfile]:
    out = []
    for x in s.elements():
        seen: dict[int, int] = {}
        cur, k = x, 1
        while cur not in seen:
            seen[cur] = k
            cur = s.table[cur][x]
            k += 1
        first = seen[cur]
        out.append(ElementProfile(x, first, k - first))
    return out


def values_key(values: Sequence[Cyclo]) -> tuple:
    return tuple(v.sort_key() for v in values)


@dataclass(frozen=True)
class Character:
    """Value table of a multiplicative function; values are 0 or roots of unity.

    ``order`` records the cyclotomic field the values were produced in and
    takes no part in equality.
    """

    values: tuple[Cyclo, ...]
    order: int = field(default=0, compare=False)

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        ro = 1
        for x, v in enumerate(vals):
            if v.is_zero():
                continue
            k = v.root_order()
            if k is None:
                raise ValueError(f"value {v} at element {x} is neither 0 nor a root of unity")
            ro = lcm(ro, k)
        if not self.order:
            object.__setattr__(self, "order", ro)

    def __call__(self, x: int) -> Cyclo:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def is_nowhere_zero(self) -> bool:
        return not any(v.is_zero() for v in self.values)

    def key(self) -> tuple:
        return values_key(self.values)

    def __hash__(self) -> int:
        return hash(self.values)

    def literals(self) -> list[str]:
        return [v.literal() for v in self.values]


def check_multiplicative(s: FiniteSemigroup, values: Sequence[Cyclo]) -> CheckReport:
    t = s.table
    for x in s.elements():
        for y in s.elements():
            if values[t[x][y]] != values[x] * values[y]:
                return CheckReport(False, (x, y), "chi(xy) != chi(x)chi(y)")
    return CheckReport.passed()


def make_character(s: FiniteSemigroup, values: Sequence[Cyclo]) -> Character:
    if len(values) != s.order:
        raise ValueError(f"expected {s.order} values, got {len(values)}")
    report = check_multiplicative(s, values)
    if not report:
        raise ValueError(f"not multiplicative at {report.witness}")
    return Character(tuple(values))


def trivial_character(s: FiniteSemigroup) -> Character:
    one = Cyclo.from_rational(1)
    return Character(tuple(one for _ in s.elements()), order=1)


_ZERO = -1  # exponent code for the value 0


def enumerate_characters(s: FiniteSemigroup) -> list[Character]:
    """All multiplicative maps S -> C, including the zero map, sorted by value vector.

    Values are tracked as exponents of zeta_N (N = lcm of element periods)
    during a backtracking search in element order; every assignment is
    propagated through the Cayley table before branching again.
    """
    profiles = element_profiles(s)
    big_n = 1
    for p in profiles:
        big_n = lcm(big_n, p.period)
    n = s.order
    t = s.table
    allowed = [frozenset([_ZERO] + [k * (big_n // p.period) for k in range(p.period)]) for p in profiles]

    def propagate(vals, queue):
        while queue:
            a = queue.pop()
            va = vals[a]
            for b in range(n):
                vb = vals[b]
                if vb is None:
                    continue
                for x, y, vx, vy in ((a, b, va, vb), (b, a, vb, va)):
                    prod = _ZERO if _ZERO in (vx, vy) else (vx + vy) % big_n
                    z = t[x][y]
                    cur = vals[z]
                    if cur is None:
                        if prod not in allowed[z]:
                            return False
                        vals[z] = prod
                        queue.append(z)
                    elif cur != prod:
                        return False
        return True

    results = []

    def search(vals):
        try:
            x = vals.index(None)
        except ValueError:
            results.append(tuple(vals))
            return
        for cand in sorted(allowed[x]):
            trial = list(vals)
            trial[x] = cand
            if propagate(trial, [x]):
                search(trial)

    search([None] * n)

    zero = Cyclo.from_rational(0, big_n)
    roots = [root_of_unity(big_n, k) for k in range(big_n)]
    chars = {
        Character(tuple(zero if v == _ZERO else roots[v] for v in vec), order=big_n) for vec in results
    }
    return sorted(chars, key=Character.key)


def admissible_mus(s: FiniteSemigroup, m: Morphism, characters: Sequence[Character] | None = None) -> list[Character]:
    """Characters mu with mu(x * m(x)) = 1 for every x."""
    if characters is None:
        characters = enumerate_characters(s)
    t = s.table
    return [mu for mu in characters if all(mu(t[x][m(x)]) == 1 for x in s.elements())]


def twist(chi: Character, mu: Character, m: Morphism) -> Character:
    """The character x -> mu(x) * chi(m(x))."""
    vals = tuple(mu(x) * chi(m(x)) for x in range(len(chi)))
    return Character(vals, order=lcm(chi.order, mu.order))
