"""Twisted Van Vleck and d'Alembert equations on finite semigroups.

Four equations are handled, all with a multiplicative mu satisfying
mu(x m(x)) = 1 and a central z0:

* ``VANVLECK_TAU``    mu(y) f(x tau(y) z0) - f(x y z0) = 2 f(x) f(y)
* ``VANVLECK_SIGMA``  mu(y) f(sigma(y) x z0) - f(x y z0) = 2 f(x) f(y)
* ``DALEMBERT_TAU``   g(x y) + mu(y) g(x tau(y)) = 2 g(x) g(y)
* ``DALEMBERT_SIGMA`` g(x y) + mu(y) g(sigma(y) x) = 2 g(x) g(y)

tau is an anti-involution, sigma an involutive automorphism of a monoid.
Every nonzero Van Vleck solution is chi(z0) (mu chi o m - chi) / 2 for a
character chi with chi(z0) != 0 and mu(z0) chi(m(z0)) = -chi(z0).
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

from .characters import Character, check_multiplicative, element_profiles, enumerate_characters, twist, values_key
from .cyclo import Cyclo, promote, root_of_unity
from .semigroup import CheckReport, FiniteSemigroup, Morphism, MorphismKind, center, validate_morphism

__all__ = [
    "BRUTE_FORCE_MAX_ORDER",
    "STATEMENT_SIGN",
    "BridgeReport",
    "Equation",
    "GridTooLarge",
    "IdentityReport",
    "InconclusiveCorpus",
    "Instance",
    "InstanceError",
    "SignReport",
    "SolveResult",
    "Solution",
    "brute_force_solutions",
    "bridge_report",
    "check_identities",
    "construct_solution",
    "dalembert_from_character",
    "diagnose_instance",
    "enumerate_dalembert_solutions",
    "enumerate_solutions",
    "g_from_f",
    "rejection_reason",
    "resolve_sigma_sign",
    "solve",
    "verify_equation",
]

BRUTE_FORCE_MAX_ORDER = 5
# sign of chi(z0) (mu chi o m - chi) / 2 in the closed form; -1 is only probed
STATEMENT_SIGN = 1


class Equation(enum.Enum):
    VANVLECK_TAU = "vanvleck-tau"
    VANVLECK_SIGMA = "vanvleck-sigma"
    DALEMBERT_TAU = "dalembert-tau"
    DALEMBERT_SIGMA = "dalembert-sigma"

    @property
    def is_vanvleck(self) -> bool:
        return self in (Equation.VANVLECK_TAU, Equation.VANVLECK_SIGMA)

    @property
    def is_sigma(self) -> bool:
        return self in (Equation.VANVLECK_SIGMA, Equation.DALEMBERT_SIGMA)

    @property
    def morphism_kind(self) -> MorphismKind:
        return MorphismKind.INVOLUTIVE_AUTOMORPHISM if self.is_sigma else MorphismKind.ANTI_INVOLUTION

    def dalembert(self) -> Equation:
        return Equation.DALEMBERT_SIGMA if self.is_sigma else Equation.DALEMBERT_TAU

    @classmethod
    def of(cls, family: str, kind: MorphismKind) -> Equation:
        sigma = kind is MorphismKind.INVOLUTIVE_AUTOMORPHISM
        if family == "vanvleck":
            return cls.VANVLECK_SIGMA if sigma else cls.VANVLECK_TAU
        if family == "dalembert":
            return cls.DALEMBERT_SIGMA if sigma else cls.DALEMBERT_TAU
        raise ValueError(f"unknown equation family {family!r}")


class InstanceError(ValueError):
    def __init__(self, diagnostics: list[tuple[str, str]]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(f"{code}: {msg}" for code, msg in diagnostics))


class GridTooLarge(ValueError):
    def __init__(self, size: int, order: int, cap: int):
        self.size, self.order, self.cap = size, order, cap
        super().__init__(f"brute force over |V|^n = {size} assignments (n = {order}) exceeds the order cap {cap}")


class InconclusiveCorpus(ValueError):
    pass


def diagnose_instance(
    semigroup: FiniteSemigroup, morphism: Morphism, z0: int, mu: Character, equation: Equation
) -> list[tuple[str, str]]:
    """Standing-hypothesis violations as (code, message) pairs; empty means valid."""
    diags: list[tuple[str, str]] = []
    s = semigroup
    names = s.names
    if len(morphism.map) != s.order or sorted(morphism.map) != list(s.elements()):
        diags.append(("morphism-not-permutation", "morphism map is not a permutation of the elements"))
        return diags
    if morphism.kind is not equation.morphism_kind:
        diags.append(("kind-mismatch", f"{equation.value} needs a {equation.morphism_kind.value} morphism"))
    report = validate_morphism(s, morphism)
    if not report:
        diags.append(("morphism-invalid", f"{morphism.kind.value} fails at {_named(names, report.witness)}: {report.detail}"))
    if equation.is_sigma and s.identity is None:
        diags.append(("not-a-monoid", "sigma equations need a monoid but the table has no identity"))
    if not 0 <= z0 < s.order:
        diags.append(("z0-out-of-range", f"z0 = {z0} is not an element"))
        return diags
    cen = center(s)
    if z0 not in cen:
        diags.append(("z0-not-central", f"z0 = {names[z0]} is not in the center"))
    elif morphism.map[z0] not in cen:
        # the derivation of the translate law also moves m(z0) past other factors
        diags.append(("morphism-z0-not-central", f"m(z0) = {names[morphism.map[z0]]} is not in the center"))
    if len(mu) != s.order:
        diags.append(("mu-wrong-length", f"mu has {len(mu)} values for {s.order} elements"))
        return diags
    mult = check_multiplicative(s, mu.values)
    if not mult:
        diags.append(("mu-not-multiplicative", f"mu fails multiplicativity at {_named(names, mult.witness)}"))
    if not report:
        return diags
    bad = next((x for x in s.elements() if mu(s.table[x][morphism.map[x]]) != 1), None)
    if bad is not None:
        diags.append(("mu-not-admissible", f"mu(x m(x)) != 1 at x = {names[bad]}"))
    return diags


def _named(names, witness):
    if witness is None:
        return "-"
    return "(" + ", ".join(names[w] for w in witness) + ")"


@dataclass(frozen=True)
class Instance:
    semigroup: FiniteSemigroup
    morphism: Morphism
    z0: int
    mu: Character
    equation: Equation

    def __post_init__(self):
        diags = diagnose_instance(self.semigroup, self.morphism, self.z0, self.mu, self.equation)
        if diags:
            raise InstanceError(diags)

    @property
    def n(self) -> int:
        return self.semigroup.order

    def dalembert(self) -> Instance:
        return Instance(self.semigroup, self.morphism, self.z0, self.mu, self.equation.dalembert())

    def is_group_inversion(self) -> bool:
        inv = self.semigroup.inverses()
        return inv is not None and inv == self.morphism.map


@dataclass(frozen=True)
class Solution:
    values: tuple[Cyclo, ...]
    equation: Equation
    provenance: Character | None = None
    verified: bool | None = None

    def key(self) -> tuple:
        return values_key(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def literals(self) -> list[str]:
        return [v.literal() for v in self.values]


# -- verification --------------------------------------------------------------


def _sides(inst: Instance, f: Sequence[Cyclo], x: int, y: int) -> tuple[Cyclo, Cyclo]:
    t = inst.semigroup.table
    m = inst.morphism.map
    mu = inst.mu.values
    z0 = inst.z0
    eq = inst.equation
    if eq is Equation.VANVLECK_TAU:
        lhs = mu[y] * f[t[t[x][m[y]]][z0]] - f[t[t[x][y]][z0]]
    elif eq is Equation.VANVLECK_SIGMA:
        lhs = mu[y] * f[t[t[m[y]][x]][z0]] - f[t[t[x][y]][z0]]
    elif eq is Equation.DALEMBERT_TAU:
        lhs = f[t[x][y]] + mu[y] * f[t[x][m[y]]]
    else:
        lhs = f[t[x][y]] + mu[y] * f[t[m[y]][x]]
    return lhs, 2 * f[x] * f[y]


def verify_equation(inst: Instance, f: Sequence[Cyclo]) -> CheckReport:
    """Exhaustively check the instance's equation; report the first failing (x, y)."""
    if len(f) != inst.n:
        raise ValueError(f"expected {inst.n} values, got {len(f)}")
    for x, y in itertools.product(inst.semigroup.elements(), repeat=2):
        lhs, rhs = _sides(inst, f, x, y)
        if lhs != rhs:
            return CheckReport(False, (x, y), f"LHS {lhs.literal()} != RHS {rhs.literal()}")
    return CheckReport.passed()


# -- construction ----------------------------------------------------------------


def rejection_reason(inst: Instance, chi: Character) -> str | None:
    """Which side condition, if any, rules chi out as a generator."""
    if chi.is_zero:
        return "zero-map"
    z0 = inst.z0
    if chi(z0).is_zero():
        return "chi(z0)=0"
    if inst.mu(z0) * chi(inst.morphism(z0)) != -chi(z0):
        return "sign-condition"
    return None


def _formula(inst: Instance, chi: Character, sign: int) -> tuple[Cyclo, ...]:
    mu, m = inst.mu, inst.morphism
    c = chi(inst.z0)
    return tuple(sign * c * (mu(x) * chi(m(x)) - chi(x)) / 2 for x in inst.semigroup.elements())


def construct_solution(inst: Instance, chi: Character, *, sign: int = STATEMENT_SIGN) -> Solution | None:
    """f = chi(z0) (mu chi o m - chi) / 2 when chi passes both side conditions.

    ``sign=-1`` builds the opposite-sign variant, used only to probe the
    sign convention.
    """
    if not inst.equation.is_vanvleck:
        raise ValueError("construct_solution needs a Van Vleck instance")
    if rejection_reason(inst, chi) is not None:
        return None
    values = _formula(inst, chi, sign)
    ok = bool(verify_equation(inst, values))
    if ok:
        z0 = inst.z0
        expected = inst.mu(z0) * chi(inst.semigroup.table[z0][inst.morphism(z0)])
        assert values[z0] == expected, "f(z0) = mu(z0) chi(z0 m(z0)) must hold for a verified solution"
    return Solution(values, inst.equation, provenance=chi, verified=ok)


@dataclass
class SolveResult:
    solutions: list[Solution]
    characters: list[Character]
    rejections: Counter = field(default_factory=Counter)
    accepted: int = 0


def solve(inst: Instance, characters: Sequence[Character] | None = None) -> SolveResult:
    if characters is None:
        characters = enumerate_characters(inst.semigroup)
    rejections: Counter = Counter()
    by_key: dict[tuple, Solution] = {}
    accepted = 0
    for chi in characters:
        reason = rejection_reason(inst, chi)
        if reason is not None:
            rejections[reason] += 1
            continue
        accepted += 1
        sol = construct_solution(inst, chi)
        if sol.is_zero:
            rejections["degenerate"] += 1
            continue
        key = sol.key()
        prev = by_key.get(key)
        # characters arrive sorted, so the first generator seen is the least
        if prev is None:
            by_key[key] = sol
    sols = [by_key[k] for k in sorted(by_key)]
    return SolveResult(sols, list(characters), rejections, accepted)


def enumerate_solutions(inst: Instance, characters: Sequence[Character] | None = None) -> list[Solution]:
    return solve(inst, characters).solutions


# -- identities of nonzero solutions ----------------------------------------------------------------


@dataclass
class IdentityReport:
    checks: dict[str, CheckReport]
    d_value: Cyclo | None = None

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _forall(elements: Iterable[int], pred, label: str) -> CheckReport:
    for x in elements:
        if not pred(x):
            return CheckReport(False, (x,), label)
    return CheckReport.passed()


IDENTITY_NAMES = (
    "oddness",
    "f_z0_nonzero",
    "f_z0_squared_zero",
    "translate",
    "square",
    "symmetry",
    "f_x_mx_zero",
    "f_e_zero",
    "group_f_z0",
    "group_z0_fourth",
    "d_diagnostic",
)


def check_identities(inst: Instance, f: Sequence[Cyclo]) -> IdentityReport:
    """Evaluate every identity a nonzero solution must satisfy.

    The monoid identity f(e) = 0 is checked only for sigma equations and the
    two group extras only when the morphism is group inversion.
    """
    s = inst.semigroup
    t = s.table
    m = inst.morphism.map
    mu = inst.mu.values
    z0 = inst.z0
    els = list(s.elements())
    fz0 = f[z0]
    z0sq = t[z0][z0]
    checks: dict[str, CheckReport] = {}
    checks["oddness"] = _forall(els, lambda x: f[x] == -mu[x] * f[m[x]], "f(x) = -mu(x) f(m(x))")
    checks["f_z0_nonzero"] = CheckReport(not fz0.is_zero(), None if fz0 else (z0,), "f(z0) != 0")
    checks["f_z0_squared_zero"] = CheckReport(f[z0sq].is_zero(), None if f[z0sq].is_zero() else (z0sq,), "f(z0^2) = 0")
    checks["translate"] = _forall(
        els, lambda x: f[t[t[x][m[z0]]][z0]] == mu[m[z0]] * f[x] * fz0, "f(x m(z0) z0) = mu(m(z0)) f(x) f(z0)"
    )
    checks["square"] = _forall(els, lambda x: f[t[x][z0sq]] == -fz0 * f[x], "f(x z0^2) = -f(z0) f(x)")
    checks["symmetry"] = _forall(els, lambda x: mu[x] * f[t[m[x]][z0]] == f[t[x][z0]], "mu(x) f(m(x) z0) = f(x z0)")
    checks["f_x_mx_zero"] = _forall(els, lambda x: f[t[x][m[x]]].is_zero(), "f(x m(x)) = 0")
    if inst.equation.is_sigma and s.identity is not None:
        e = s.identity
        checks["f_e_zero"] = CheckReport(f[e].is_zero(), None if f[e].is_zero() else (e,), "f(e) = 0")
    if inst.is_group_inversion():
        checks["group_f_z0"] = CheckReport(fz0 == mu[z0], None if fz0 == mu[z0] else (z0,), "f(z0) = mu(z0)")
        z0_4 = s.power(z0, 4)
        checks["group_z0_fourth"] = _forall(
            els, lambda x: f[t[x][z0_4]] == mu[z0] * mu[z0] * f[x], "f(x z0^4) = mu(z0)^2 f(x)"
        )
    d_value = None
    if fz0:
        g = [f[t[x][z0]] / fz0 for x in els]
        d_value = 2 * g[z0] * g[z0] - g[z0sq]
        ok = d_value == fz0
        checks["d_diagnostic"] = CheckReport(ok, None if ok else (z0,), "d(z0) = 2 g(z0)^2 - g(z0^2) = f(z0)")
    else:
        checks["d_diagnostic"] = CheckReport(False, (z0,), "d(z0) undefined: f(z0) = 0")
    return IdentityReport(checks, d_value)


# -- d'Alembert bridge -------------------------------------------------------------------


def g_from_f(inst: Instance, f: Sequence[Cyclo]) -> Solution:
    """g(x) = f(x z0) / f(z0), a solution of the matching d'Alembert equation."""
    fz0 = f[inst.z0]
    if fz0.is_zero():
        raise ZeroDivisionError("g_from_f needs f(z0) != 0")
    t = inst.semigroup.table
    inv = fz0.inverse()
    values = tuple(f[t[x][inst.z0]] * inv for x in inst.semigroup.elements())
    dinst = inst.dalembert()
    return Solution(values, dinst.equation, verified=bool(verify_equation(dinst, values)))


def dalembert_from_character(chi: Character, mu: Character, m: Morphism, equation: Equation | None = None) -> Solution:
    """g = (chi + mu chi o m) / 2."""
    tw = twist(chi, mu, m)
    values = tuple((a + b) / 2 for a, b in zip(chi.values, tw.values))
    if equation is None:
        equation = Equation.DALEMBERT_SIGMA if m.kind is MorphismKind.INVOLUTIVE_AUTOMORPHISM else Equation.DALEMBERT_TAU
    return Solution(values, equation, provenance=chi)


def enumerate_dalembert_solutions(inst: Instance, characters: Sequence[Character] | None = None) -> list[Solution]:
    """Distinct (chi + mu chi o m) / 2 over nonzero chi, each verified."""
    if inst.equation.is_vanvleck:
        inst = inst.dalembert()
    if characters is None:
        characters = enumerate_characters(inst.semigroup)
    seen: dict[tuple, Solution] = {}
    for chi in characters:
        if chi.is_zero:
            continue
        g = dalembert_from_character(chi, inst.mu, inst.morphism, inst.equation)
        if g.key() not in seen:
            seen[g.key()] = Solution(g.values, g.equation, chi, bool(verify_equation(inst, g.values)))
    return [seen[k] for k in sorted(seen)]


@dataclass
class BridgeReport:
    g: Solution
    checks: dict[str, CheckReport]

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())


def bridge_report(inst: Instance, sol: Solution) -> BridgeReport:
    f = sol.values
    g = g_from_f(inst, f)
    s = inst.semigroup
    t = s.table
    gv = g.values
    checks = {"dalembert": verify_equation(inst.dalembert(), gv)}
    bad = next(((x, y) for x in s.elements() for y in s.elements() if gv[t[x][y]] != gv[t[y][x]]), None)
    checks["abelian"] = CheckReport(bad is None, bad, "g(xy) = g(yx)")
    if inst.equation.is_sigma and s.identity is not None:
        checks["g_e_one"] = CheckReport(gv[s.identity] == 1, None, "g(e) = 1")
    checks["g_z0_zero"] = CheckReport(gv[inst.z0].is_zero(), None, "g(z0) = 0")
    if sol.provenance is not None:
        ref = dalembert_from_character(sol.provenance, inst.mu, inst.morphism).values
        diff = next((x for x in s.elements() if ref[x] != gv[x]), None)
        checks["matches_character_form"] = CheckReport(diff is None, None if diff is None else (diff,), "g = (chi + mu chi o m)/2")
    d = 2 * gv[inst.z0] * gv[inst.z0] - gv[t[inst.z0][inst.z0]]
    checks["d_equals_f_z0"] = CheckReport(d == f[inst.z0] and not d.is_zero(), None, "d(z0) = f(z0) != 0")
    return BridgeReport(g, checks)


# -- brute-force oracle ---------------------------------------------------------------------


def _grid(order: int) -> list[Cyclo]:
    roots = [root_of_unity(order, k) for k in range(order)]
    seen = {}
    for w1, w2, w3 in itertools.product(roots, repeat=3):
        v = (w1 - w2) * w3 / 2
        seen.setdefault(v, v)
    return sorted(seen.values(), key=Cyclo.sort_key)


def default_grid_order(s: FiniteSemigroup) -> int:
    out = 1
    for p in element_profiles(s):
        out = lcm(out, p.period)
    return out


def brute_force_solutions(
    inst: Instance, grid_order: int | None = None, *, max_order: int = BRUTE_FORCE_MAX_ORDER
) -> list[tuple[Cyclo, ...]]:
    """Every f: S -> V solving the equation, zero included.

    V = {(w1 - w2) w3 / 2 : w_i N-th roots of unity}.  This is a completeness
    probe within that value universe only.  For Van Vleck equations branches
    are pruned with f(z0^2) = 0 and f(x) = -mu(x) f(m(x)), both of which every
    solution (zero included) satisfies; all pairs are then checked as soon as
    the values they touch are assigned.
    """
    s = inst.semigroup
    n = s.order
    if grid_order is None:
        grid_order = default_grid_order(s)
    lift = lcm(grid_order, inst.mu.order or 1)
    grid = [promote(v, lift) for v in _grid(grid_order)]
    size = len(grid) ** n
    if n > max_order:
        raise GridTooLarge(size, n, max_order)
    t = s.table
    m = inst.morphism.map
    z0 = inst.z0
    eq = inst.equation
    lifted = Instance(s, inst.morphism, z0, Character(tuple(promote(v, lift) for v in inst.mu.values), lift), eq)
    mu = lifted.mu.values

    # pair (x, y) is checkable once every element it reads is assigned
    pending: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x, y in itertools.product(range(n), repeat=2):
        if eq is Equation.VANVLECK_TAU:
            touched = (x, y, t[t[x][m[y]]][z0], t[t[x][y]][z0])
        elif eq is Equation.VANVLECK_SIGMA:
            touched = (x, y, t[t[m[y]][x]][z0], t[t[x][y]][z0])
        elif eq is Equation.DALEMBERT_TAU:
            touched = (x, y, t[x][y], t[x][m[y]])
        else:
            touched = (x, y, t[x][y], t[m[y]][x])
        pending[max(touched)].append((x, y))

    zero = Cyclo(lift, [])
    z0sq = t[z0][z0]
    found = []
    f: list[Cyclo | None] = [None] * n

    def candidates(x):
        if not eq.is_vanvleck:
            return grid
        if x == z0sq:
            return [zero]
        if m[x] < x:
            forced = -mu[x] * f[m[x]]
            return [v for v in grid if v == forced]
        if m[x] == x:
            return [v for v in grid if v == -mu[x] * v]
        return grid

    def rec(x):
        if x == n:
            found.append(tuple(f))
            return
        for v in candidates(x):
            f[x] = v
            if all(_pair_ok(lifted, f, a, b) for a, b in pending[x]):
                rec(x + 1)
        f[x] = None

    rec(0)
    return sorted(found, key=values_key)


def _pair_ok(inst, f, x, y) -> bool:
    lhs, rhs = _sides(inst, f, x, y)
    return lhs == rhs


# -- sign convention probe ---------------------------------------------------------------------


@dataclass
class SignReport:
    per_instance: list[dict]
    valid_signs: list[int]
    rejected_somewhere: list[int]
    adopted: int

    def summary(self) -> str:
        names = {1: "chi(z0)(mu chi o sigma - chi)/2", -1: "chi(z0)(chi - mu chi o sigma)/2"}
        lines = [f"adopted sign {self.adopted:+d}: f = {names[self.adopted]}"]
        for s in (1, -1):
            state = "valid on every instance" if s in self.valid_signs else "rejected"
            lines.append(f"  sign {s:+d} [{names[s]}]: {state}")
        return "\n".join(lines)


def resolve_sigma_sign(corpus: Sequence[Instance]) -> SignReport:
    """Test both sign conventions for the sigma-variant closed form on every instance."""
    rows = []
    passes = {1: True, -1: True}
    rejected = {1: False, -1: False}
    informative = 0
    for inst in corpus:
        chis = [c for c in enumerate_characters(inst.semigroup) if rejection_reason(inst, c) is None]
        row = {"instance": inst.semigroup.name, "z0": inst.semigroup.names[inst.z0], "generators": len(chis)}
        for sign in (1, -1):
            results = []
            for chi in chis:
                sol = construct_solution(inst, chi, sign=sign)
                if sol.is_zero:
                    continue
                results.append(sol.verified)
            row[sign] = {"checked": len(results), "passed": sum(results)}
            if results:
                if not all(results):
                    passes[sign] = False
                    rejected[sign] = True
        if row[1]["checked"]:
            informative += 1
        rows.append(row)
    if not informative:
        raise InconclusiveCorpus("no instance in the corpus admits a nonzero solution")
    valid = [s for s in (1, -1) if passes[s]]
    adopted = valid[0] if len(valid) == 1 else STATEMENT_SIGN
    return SignReport(rows, valid, [s for s in (1, -1) if rejected[s]], adopted)
