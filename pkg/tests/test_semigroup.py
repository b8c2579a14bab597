import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veqlab.semigroup import (
    FiniteSemigroup,
    Morphism,
    MorphismKind,
    NotAPermutation,
    NotAssociative,
    OrderCapExceeded,
    OutOfRangeEntry,
    center,
    check_associativity,
    enumerate_morphisms,
    find_identity,
    make_cyclic_group,
    make_dihedral,
    make_direct_product,
    make_left_zero,
    make_null_semigroup,
    make_quaternion,
    validate_morphism,
)

TAU = MorphismKind.ANTI_INVOLUTION
SIGMA = MorphismKind.INVOLUTIVE_AUTOMORPHISM


def first_nonassociative(t):
    n = len(t)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    return (x, y, z)
    return None


def test_cyclic_tables_are_associative():
    for n in range(1, 9):
        assert check_associativity(make_cyclic_group(n).table)


def test_nonassociative_witness_is_first_lexicographic():
    t = [[1, 0], [0, 0]]
    rep = check_associativity(t)
    assert not rep
    assert rep.witness == first_nonassociative(t) == (0, 0, 1)
    with pytest.raises(NotAssociative):
        FiniteSemigroup(t)


def test_max_semilattice_is_associative():
    # {0,1} under max: sometimes mistaken for a non-example
    assert check_associativity([[0, 1], [1, 1]])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_associativity_check_agrees_with_loop(t):
    rep = check_associativity(t)
    w = first_nonassociative(t)
    assert rep.ok == (w is None)
    assert rep.witness == w


def test_out_of_range_entry():
    with pytest.raises(OutOfRangeEntry):
        check_associativity([[0, 2], [1, 0]])


def test_identity_and_center():
    assert find_identity(make_cyclic_group(5)) == 0
    assert find_identity(make_null_semigroup()) is None
    assert find_identity(make_left_zero(3)) is None
    d4 = make_dihedral(4)
    assert center(d4) == frozenset({d4.index_of("e"), d4.index_of("r2")})
    q8 = make_quaternion()
    assert center(q8) == frozenset({q8.index_of("1"), q8.index_of("-1")})
    assert center(make_cyclic_group(6)) == frozenset(range(6))
    assert center(make_left_zero(3)) == frozenset()


def test_group_features():
    d4 = make_dihedral(4)
    assert d4.order == 8 and d4.is_group() and not d4.is_commutative()
    assert not make_null_semigroup().is_group()
    inv = make_cyclic_group(5).inverses()
    assert inv == (0, 4, 3, 2, 1)
    assert d4.mul(d4.index_of("r"), d4.index_of("r"), d4.index_of("r")) == d4.index_of("r3")
    assert d4.power(d4.index_of("r"), 4) == d4.index_of("e")


def _inversion(s):
    return tuple(s.inverses())


def test_inversion_is_tau_on_any_group():
    for s in [make_dihedral(3), make_dihedral(4), make_quaternion(), make_cyclic_group(6)]:
        assert validate_morphism(s, Morphism(TAU, _inversion(s)))


def test_inversion_on_d4_fails_as_sigma_at_noncommuting_pair():
    d4 = make_dihedral(4)
    inv = _inversion(d4)
    rep = validate_morphism(d4, Morphism(SIGMA, inv))
    assert not rep
    x, y = rep.witness
    t = d4.table
    assert t[x][y] != t[y][x]
    # first failing pair, lexicographically
    for a, b in itertools.product(range(8), repeat=2):
        if inv[t[a][b]] != t[inv[a]][inv[b]]:
            assert (a, b) == (x, y)
            break


def test_non_involution_and_non_permutation():
    z3 = make_cyclic_group(3)
    rep = validate_morphism(z3, Morphism(SIGMA, (1, 2, 0)))
    assert not rep and rep.witness == (0,)
    with pytest.raises(NotAPermutation):
        validate_morphism(z3, Morphism(SIGMA, (0, 0, 1)))


def _oracle_morphisms(s, kind):
    n = s.order
    t = s.table
    out = []
    for p in itertools.permutations(range(n)):
        if any(p[p[x]] != x for x in range(n)):
            continue
        anti = kind is TAU
        if all(p[t[x][y]] == (t[p[y]][p[x]] if anti else t[p[x]][p[y]]) for x in range(n) for y in range(n)):
            out.append(p)
    return sorted(out)


SMALL = [
    make_cyclic_group(1), make_cyclic_group(2), make_cyclic_group(3), make_cyclic_group(4),
    make_cyclic_group(5), make_left_zero(2), make_left_zero(3), make_null_semigroup(),
    make_direct_product(make_cyclic_group(2), make_cyclic_group(2)),
]


@pytest.mark.parametrize("s", SMALL, ids=lambda s: s.name)
@pytest.mark.parametrize("kind", [TAU, SIGMA], ids=["tau", "sigma"])
def test_enumeration_matches_permutation_filter(s, kind):
    got = [m.map for m in enumerate_morphisms(s, kind)]
    assert got == _oracle_morphisms(s, kind)


def test_left_zero_has_no_anti_involution():
    # tau(xy) = tau(x) but tau(y)tau(x) = tau(y)
    assert enumerate_morphisms(make_left_zero(2), TAU) == []
    assert len(enumerate_morphisms(make_left_zero(2), SIGMA)) == 2


def test_commutative_tau_equals_sigma():
    s = make_cyclic_group(4)
    assert [m.map for m in enumerate_morphisms(s, TAU)] == [m.map for m in enumerate_morphisms(s, SIGMA)]


def test_enumeration_cap():
    with pytest.raises(OrderCapExceeded):
        enumerate_morphisms(make_cyclic_group(9), TAU)
    assert len(enumerate_morphisms(make_cyclic_group(9), TAU, cap=9)) == 2


def test_builders_shape():
    p = make_direct_product(make_dihedral(4), make_cyclic_group(4))
    assert p.order == 32 and p.is_group()
    assert p.names[5] == "(r,x1)"
    q8 = make_quaternion()
    assert q8.names == ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    i, j, k = (q8.index_of(v) for v in "ijk")
    assert q8.mul(i, j) == k and q8.mul(j, i) == q8.index_of("-k")
    d4 = make_dihedral(4)
    assert d4.names == ("e", "r", "r2", "r3", "s", "sr", "sr2", "sr3")
    srs = d4.mul(d4.index_of("s"), d4.index_of("r"), d4.index_of("s"))
    assert srs == d4.index_of("r3")


def test_bad_names_and_identity():
    with pytest.raises(ValueError):
        FiniteSemigroup(((0,),), names=("a", "b"))
    with pytest.raises(ValueError):
        FiniteSemigroup(make_cyclic_group(2).table, identity=1)
