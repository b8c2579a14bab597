"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as a polynomial in zeta_N of degree below
phi(N), reduced modulo the N-th cyclotomic polynomial.  Because Phi_N is
irreducible this representation is canonical, so the zero test is exact.
Coefficients are kept as integer numerators over one positive common
denominator.

Elements of different orders combine by promoting both sides into
Q(zeta_lcm).  Hashing and ordering go through the *minimal* representation
(the smallest N whose field contains the value) so that equal values always
hash alike regardless of the field they were computed in.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "Cyclo",
    "IncompatibleOrders",
    "LiteralError",
    "add",
    "conj",
    "cyclotomic_polynomial",
    "is_zero",
    "mul",
    "neg",
    "parse_literal",
    "promote",
    "root_of_unity",
    "scale_by_rational",
    "sub",
    "to_float",
]


class IncompatibleOrders(ValueError):
    """Raised when mixed-order arithmetic is attempted with promotion disabled."""


class LiteralError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"bad cyclotomic literal {text!r} at offset {pos}: expected {expected}")


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _exact_div_monic(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Return the coefficients of Phi_n, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_n for 0 <= k < n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and fold the overflow coefficient back through Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(exps: Iterable[tuple[int, int]], n: int) -> list[int]:
    """Sum c * x^e (mod x^n - 1, then mod Phi_n) for (e, c) pairs."""
    table = _power_table(n)
    out = [0] * _degree(n)
    for e, c in exps:
        if c:
            row = table[e % n]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if gcd(k, n) == 1)


# ---------------------------------------------------------------------------
# subfield detection, used for the minimal representation


def _solve_subfield(n: int, d: int):
    """Prepare a solver expressing elements of Q(zeta_n) in the basis of Q(zeta_d).

    Returns (rows, inverse, cols): ``inverse`` maps the coordinates of an
    element at ``rows`` to its Q(zeta_d) coordinates; ``cols`` are the
    subfield basis vectors, used to confirm membership.
    """
    step = n // d
    table = _power_table(n)
    cols = [table[(j * step) % n] for j in range(_degree(d))]
    k = len(cols)
    mat = [[Fraction(cols[j][i]) for j in range(k)] for i in range(len(cols[0]))]
    chosen = _independent_rows(mat, k)
    inv = _invert([mat[i] for i in chosen])
    return tuple(chosen), inv, cols


def _independent_rows(mat, k):
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for i, row in enumerate(mat):
        v = row[:]
        for b, c in basis:
            if v[c] != 0:
                f = v[c] / b[c]
                v = [x - f * y for x, y in zip(v, b)]
        c = next((j for j, x in enumerate(v) if x != 0), None)
        if c is not None:
            basis.append((v, c))
            chosen.append(i)
            if len(chosen) == k:
                return chosen
    raise ArithmeticError("subfield basis is degenerate")


def _invert(sq):
    k = len(sq)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(sq)]
    for c in range(k):
        pr = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[pr] = aug[pr], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[k:] for row in aug]


_subfield_solver = lru_cache(maxsize=None)(_solve_subfield)


# ---------------------------------------------------------------------------


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = den
    for x in nums:
        g = gcd(g, x)
        if g == 1:
            break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g > 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class Cyclo:
    """An exact element of Q(zeta_N).

    >>> i = root_of_unity(4, 1)
    >>> i * i == -1
    True
    """

    def __init__(self, order: int, nums: Sequence[int], den: int = 1, *, _canonical: bool = False):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        self.order = order
        if _canonical:
            self.nums = tuple(nums)
            self.den = den
            return
        d = _degree(order)
        nums = list(nums)
        if len(nums) > d:
            nums = _reduce(enumerate(nums), order)
        else:
            nums = nums + [0] * (d - len(nums))
        self.nums, self.den = _normalize(nums, den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, q, order: int = 1) -> Cyclo:
        q = Fraction(q)
        return cls(order, [q.numerator], q.denominator)

    @classmethod
    def coerce(cls, other) -> Cyclo | None:
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Rational)):
            return cls.from_rational(other)
        return None

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    @cached_property
    def minimal(self) -> Cyclo:
        """The same value in the smallest cyclotomic field containing it."""
        cur = self
        changed = True
        while changed and cur.order > 1:
            changed = False
            for p in _prime_factors(cur.order):
                down = _demote(cur, cur.order // p)
                if down is not None:
                    cur = down
                    changed = True
                    break
        return cur

    @cached_property
    def _key(self) -> tuple:
        if self.is_zero():
            return (0,)
        r = self.root_order()
        if r is not None:
            m = self.minimal
            j = next(j for j in range(r) if promote(m, lcm(m.order, r)) == root_of_unity(r, j))
            return (1, Fraction(j, r))
        m = self.minimal
        return (2, m.order, m.coeffs)

    def sort_key(self) -> tuple:
        """Total order: zero, then roots of unity by angle, then the rest."""
        return self._key

    def __hash__(self) -> int:
        m = self.minimal
        return hash((m.order, m.nums, m.den))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = Cyclo.coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.nums == other.nums and self.den == other.den
        a, b = _common(self, other)
        return a.nums == b.nums and a.den == b.den

    def __add__(self, other):
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else sub(self, o)

    def __rsub__(self, other):
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else sub(o, self)

    def __neg__(self) -> Cyclo:
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return scale_by_rational(self, other)
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return scale_by_rational(self, 1 / Fraction(other))
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = Cyclo.coerce(other)
        return NotImplemented if o is None else mul(o, self.inverse())

    def __pow__(self, k: int) -> Cyclo:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo(self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> Cyclo:
        """Apply the field automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        if gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.order}")
        return Cyclo(self.order, _reduce(((j * k, c) for j, c in enumerate(self.nums)), self.order), self.den)

    def inverse(self) -> Cyclo:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # product of the other conjugates divided by the (rational) norm
        rest = Cyclo(self.order, [1])
        for k in _units(self.order):
            if k % self.order != 1 % self.order:
                rest = rest * self.galois(k)
        norm = self * rest
        assert not any(norm.nums[1:]), "norm must be rational"
        return scale_by_rational(rest, Fraction(norm.den, norm.nums[0]))

    def root_order(self) -> int | None:
        """Multiplicative order if this is a root of unity, else None."""
        if self.is_zero():
            return None
        m = self.minimal
        bound = lcm(2, m.order)
        for k in _divisors(bound):
            if m**k == 1:
                return k
        return None

    # -- display ---------------------------------------------------------------

    def literal(self) -> str:
        return format_literal(self)

    def __repr__(self) -> str:
        return f"Cyclo({format_literal(self)!r})"

    __str__ = literal


def _common(a: Cyclo, b: Cyclo) -> tuple[Cyclo, Cyclo]:
    if a.order == b.order:
        return a, b
    m = lcm(a.order, b.order)
    return promote(a, m), promote(b, m)


def _demote(a: Cyclo, d: int) -> Cyclo | None:
    """Express a in Q(zeta_d) if it lies there, else None."""
    n = a.order
    rows, inv, cols = _subfield_solver(n, d)
    rhs = [a.nums[i] for i in rows]
    coeff = [sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Fraction(0)) for i in range(len(inv))]
    for r in range(len(a.nums)):
        if sum(cols[j][r] * coeff[j] for j in range(len(coeff))) != a.nums[r]:
            return None
    den = 1
    for c in coeff:
        den = lcm(den, c.denominator)
    nums = [int(c * den) for c in coeff]
    return Cyclo(d, nums, den * a.den)


def _check(a: Cyclo, b: Cyclo, auto_promote: bool) -> tuple[Cyclo, Cyclo]:
    if a.order != b.order and not auto_promote:
        raise IncompatibleOrders(f"orders {a.order} and {b.order} differ")
    return _common(a, b)


def add(a: Cyclo, b: Cyclo, *, auto_promote: bool = True) -> Cyclo:
    a, b = _check(a, b, auto_promote)
    if a.den == b.den:
        return Cyclo(a.order, [x + y for x, y in zip(a.nums, b.nums)], a.den)
    return Cyclo(a.order, [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)], a.den * b.den)


def sub(a: Cyclo, b: Cyclo, *, auto_promote: bool = True) -> Cyclo:
    return add(a, neg(b), auto_promote=auto_promote)


def neg(a: Cyclo) -> Cyclo:
    return Cyclo(a.order, [-x for x in a.nums], a.den, _canonical=True)


def mul(a: Cyclo, b: Cyclo, *, auto_promote: bool = True) -> Cyclo:
    a, b = _check(a, b, auto_promote)
    n = a.order
    if not any(a.nums) or not any(b.nums):
        return Cyclo(n, [])
    prod: dict[int, int] = {}
    for i, x in enumerate(a.nums):
        if x:
            for j, y in enumerate(b.nums):
                if y:
                    prod[i + j] = prod.get(i + j, 0) + x * y
    return Cyclo(n, _reduce(prod.items(), n), a.den * b.den)


def scale_by_rational(a: Cyclo, q) -> Cyclo:
    q = Fraction(q)
    return Cyclo(a.order, [x * q.numerator for x in a.nums], a.den * q.denominator)


def promote(a: Cyclo, m: int) -> Cyclo:
    """Embed a into Q(zeta_m); requires a.order | m."""
    if m % a.order:
        raise IncompatibleOrders(f"{a.order} does not divide {m}")
    if m == a.order:
        return a
    step = m // a.order
    return Cyclo(m, _reduce(((j * step, c) for j, c in enumerate(a.nums)), m), a.den)


def root_of_unity(n: int, k: int = 1) -> Cyclo:
    """zeta_n^k as an element of Q(zeta_n)."""
    return Cyclo(n, _power_table(n)[k % n])


def conj(a: Cyclo) -> Cyclo:
    """Complex conjugate: zeta -> zeta^-1."""
    return a.galois(-1 % a.order if a.order > 1 else 1)


def is_zero(a: Cyclo) -> bool:
    return a.is_zero()


def to_float(a: Cyclo) -> complex:
    """Complex approximation under zeta_N -> exp(2 pi i / N)."""
    with mpmath.workdps(40):
        total = mpmath.mpc(0)
        for j, c in enumerate(a.nums):
            if c:
                total += c * mpmath.expjpi(mpmath.mpf(2 * j) / a.order)
        total /= a.den
        return complex(total)


# ---------------------------------------------------------------------------
# literal grammar:  value := term (('+'|'-') term)* ; term := rational ('*' root)? | root
#                   root := 'w(' N ',' k ')' ; rational := int ('/' posint)?


def format_literal(a: Cyclo) -> str:
    m = a.minimal
    terms = []
    for j, c in enumerate(m.coeffs):
        if c == 0:
            continue
        terms.append((j, c))
    if not terms:
        return "0"
    out = []
    for idx, (j, c) in enumerate(terms):
        mag = abs(c)
        if idx == 0:
            lead = "-" if c < 0 else ""
        else:
            lead = "-" if c < 0 else "+"
        if j == 0:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = f"w({m.order},{j})"
            if idx == 0 and c < 0:
                body = f"1*{body}"
        else:
            body = f"{_fmt_rational(mag)}*w({m.order},{j})"
        out.append(lead + body)
    return "".join(out)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_TOKEN = re.compile(r"\s*(?:(?P<root>w\(\s*(?P<n>\d+)\s*,\s*(?P<k>-?\d+)\s*\))|(?P<int>-?\d+)(?:\s*/\s*(?P<den>\d+))?)")


def parse_literal(text: str) -> Cyclo:
    """Parse a cyclotomic literal such as ``1/2*w(8,1)-1/2*w(8,7)``."""
    src = text
    pos = 0
    total = Cyclo(1, [0])
    sign = 1
    first = True
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if not first:
            if pos >= len(src):
                break
            if src[pos] not in "+-":
                raise LiteralError(text, pos, "'+' or '-'")
            sign = 1 if src[pos] == "+" else -1
            pos += 1
        term, pos = _parse_term(src, pos)
        total = total + term * sign
        first = False
    return total


def _parse_term(src: str, pos: int) -> tuple[Cyclo, int]:
    mt = _TOKEN.match(src, pos)
    if not mt:
        raise LiteralError(src, pos, "rational or w(N,k)")
    if mt.group("root"):
        return _root(src, mt), mt.end()
    q = Fraction(int(mt.group("int")))
    if mt.group("den") is not None:
        den = int(mt.group("den"))
        if den == 0:
            raise LiteralError(src, mt.start("den"), "positive denominator")
        q /= den
    pos = mt.end()
    rest = src[pos:].lstrip()
    if rest.startswith("*"):
        pos = len(src) - len(rest) + 1
        mr = _TOKEN.match(src, pos)
        if not mr or not mr.group("root"):
            raise LiteralError(src, pos, "w(N,k)")
        return _root(src, mr) * q, mr.end()
    return Cyclo.from_rational(q), pos


def _root(src, m) -> Cyclo:
    n = int(m.group("n"))
    if n < 1:
        raise LiteralError(src, m.start("n"), "positive order")
    return root_of_unity(n, int(m.group("k")))
