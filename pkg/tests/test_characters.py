import itertools

import pytest

from veqlab.characters import (
    Character,
    admissible_mus,
    check_multiplicative,
    element_profiles,
    enumerate_characters,
    make_character,
    twist,
)
from veqlab.cyclo import Cyclo, root_of_unity
from veqlab.semigroup import (
    FiniteSemigroup,
    Morphism,
    MorphismKind,
    check_associativity,
    enumerate_morphisms,
    make_cyclic_group,
    make_dihedral,
    make_direct_product,
    make_left_zero,
    make_null_semigroup,
    make_quaternion,
)

TAU = MorphismKind.ANTI_INVOLUTION


def naive_characters(s, big_n=12):
    """Every assignment of {0} U mu_N to the elements, filtered by multiplicativity.

    N = 12 covers every period up to 4.
    """
    n = s.order
    t = s.table
    opts = [None] + list(range(big_n))
    found = set()
    for vec in itertools.product(opts, repeat=n):
        ok = True
        for x in range(n):
            for y in range(n):
                a, b = vec[x], vec[y]
                p = None if a is None or b is None else (a + b) % big_n
                if vec[t[x][y]] != p:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(tuple(Cyclo.from_rational(0) if v is None else root_of_unity(big_n, v) for v in vec))
    return found


def all_semigroups(n):
    for flat in itertools.product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if check_associativity(t):
            yield FiniteSemigroup(t)


def with_zero(s):
    """Adjoin an absorbing element."""
    n = s.order
    t = [list(r) + [n] for r in s.table] + [[n] * (n + 1)]
    return FiniteSemigroup(t)


def test_element_profiles():
    z6 = make_cyclic_group(6)
    assert [p.period for p in element_profiles(z6)] == [1, 6, 3, 2, 3, 6]
    assert all(p.index == 1 for p in element_profiles(z6))
    null = element_profiles(make_null_semigroup())
    assert (null[0].index, null[0].period) == (2, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_cyclic_count(n):
    chars = enumerate_characters(make_cyclic_group(n))
    assert len(chars) == n + 1
    assert chars[0].is_zero
    assert all(c.is_nowhere_zero for c in chars[1:])


def test_sorted_as_powers_on_cyclic():
    chars = enumerate_characters(make_cyclic_group(4))
    i = root_of_unity(4)
    for k, c in enumerate(chars[1:]):
        assert c(1) == i ** k


def test_klein_and_nonabelian_counts():
    v4 = make_direct_product(make_cyclic_group(2), make_cyclic_group(2))
    assert len(enumerate_characters(v4)) == 5
    # abelianisations: D4 -> V4 and Q8 -> V4
    assert len(enumerate_characters(make_dihedral(4))) == 5
    assert len(enumerate_characters(make_quaternion())) == 5
    assert len(enumerate_characters(make_dihedral(3))) == 3


def test_left_zero_characters():
    # chi(x) = chi(x)chi(y) for all x, y: zero or constant one
    chars = enumerate_characters(make_left_zero(3))
    assert [tuple(c.literals()) for c in chars] == [("0", "0", "0"), ("1", "1", "1")]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_backtracking_matches_naive_on_all_small_tables(n):
    for s in all_semigroups(n):
        got = {c.values for c in enumerate_characters(s)}
        assert got == naive_characters(s), s.table


ORDER_FOUR = [
    make_cyclic_group(4),
    make_direct_product(make_cyclic_group(2), make_cyclic_group(2)),
    make_left_zero(4),
    make_direct_product(make_cyclic_group(2), make_left_zero(2)),
    make_direct_product(make_cyclic_group(2), make_null_semigroup()),
    with_zero(make_cyclic_group(3)),
    with_zero(with_zero(make_cyclic_group(2))),
    FiniteSemigroup(tuple(tuple(max(x, y) for y in range(4)) for x in range(4))),
    FiniteSemigroup(tuple(tuple(min(x + y, 3) for y in range(4)) for x in range(4))),
]


@pytest.mark.parametrize("s", ORDER_FOUR, ids=range(len(ORDER_FOUR)))
def test_backtracking_matches_naive_order_four(s):
    got = {c.values for c in enumerate_characters(s)}
    assert got == naive_characters(s)
    assert len(got) == len(enumerate_characters(s))


def test_character_rejects_bad_values():
    with pytest.raises(ValueError):
        Character((Cyclo.from_rational(2),))
    z2 = make_cyclic_group(2)
    with pytest.raises(ValueError):
        make_character(z2, [Cyclo.from_rational(1), root_of_unity(4)])
    assert not check_multiplicative(z2, [Cyclo.from_rational(1), root_of_unity(4)])


def _neg(n):
    return Morphism(TAU, tuple((-x) % n for x in range(n)))


def test_admissible_mu_examples():
    z4 = make_cyclic_group(4)
    assert len(admissible_mus(z4, _neg(4))) == 4
    ident = Morphism(TAU, tuple(range(4)))
    mus = admissible_mus(z4, ident)
    # mu(2x) = mu(x)^2 = 1
    assert [tuple(m.literals()) for m in mus] == [("1", "1", "1", "1"), ("1", "-1", "1", "-1")]


SEMIGROUPS = [
    make_cyclic_group(4), make_cyclic_group(6), make_dihedral(4), make_quaternion(),
    make_direct_product(make_cyclic_group(2), make_cyclic_group(2)), make_left_zero(2),
    make_direct_product(make_cyclic_group(2), make_null_semigroup()),
]


@pytest.mark.parametrize("s", SEMIGROUPS, ids=lambda s: s.name)
def test_admissible_mus_are_nowhere_zero(s):
    for kind in MorphismKind:
        for m in enumerate_morphisms(s, kind):
            for mu in admissible_mus(s, m):
                assert mu.is_nowhere_zero


@pytest.mark.parametrize("s", SEMIGROUPS, ids=lambda s: s.name)
def test_twist_is_character_and_involutive(s):
    chars = enumerate_characters(s)
    for kind in MorphismKind:
        for m in enumerate_morphisms(s, kind):
            for mu in admissible_mus(s, m, chars):
                for chi in chars:
                    tw = twist(chi, mu, m)
                    assert check_multiplicative(s, tw.values)
                    assert twist(tw, mu, m) == chi


def test_twist_on_z4():
    z4 = make_cyclic_group(4)
    chars = enumerate_characters(z4)
    one = chars[1]
    mu = one
    # chi_k o (-x) = chi_{-k}
    assert twist(chars[2], mu, _neg(4)) == chars[4]
    assert twist(one, mu, _neg(4)) == one
