"""Regenerate corpus/*.veq from the family builders."""

from __future__ import annotations

import sys
from pathlib import Path

from veqlab.characters import make_character, trivial_character
from veqlab.cyclo import Cyclo
from veqlab.engine import Equation, Instance
from veqlab.instance_file import InstanceFile, print_instance
from veqlab.semigroup import (
    FiniteSemigroup,
    Morphism,
    MorphismKind,
    make_cyclic_group,
    make_dihedral,
    make_direct_product,
    make_left_zero,
    make_null_semigroup,
    make_quaternion,
)

TAU = MorphismKind.ANTI_INVOLUTION
SIGMA = MorphismKind.INVOLUTIVE_AUTOMORPHISM


def signs(*xs):
    return [Cyclo.from_rational(x) for x in xs]


def build():
    out: dict[str, tuple[str, InstanceFile]] = {}

    def add(fname, comment, s: FiniteSemigroup, kind, mmap, z0, mu=None, family="vanvleck"):
        mu_vals = tuple(mu) if mu is not None else None
        if mmap is not None:
            # make sure every generated (well-formed) instance is valid
            eq = Equation.of(family, kind)
            char = make_character(s, mu_vals) if mu_vals else trivial_character(s)
            try:
                Instance(s, Morphism(kind, mmap), z0, char, eq)
            except ValueError:
                if "rejected" not in comment:
                    raise
        out[fname] = (comment, InstanceFile(s.names, s.table, z0, kind if mmap else None,
                                            tuple(mmap) if mmap else None, mu_vals, family))

    def neg(n):
        return tuple((-x) % n for x in range(n))

    for kind, tag in ((TAU, "tau"), (SIGMA, "sigma")):
        z4 = make_cyclic_group(4)
        add(f"z4_{tag}.veq", f"Z4, inversion as {tag}, z0 = 1, mu = 1: the discrete sine x -> sin(pi x / 2)",
            z4, kind, neg(4), 1, signs(1, 1, 1, 1))
        add(f"z4_{tag}_mu_alt.veq", f"Z4, inversion as {tag}, z0 = 1, mu(x) = (-1)^x",
            z4, kind, neg(4), 1, signs(1, -1, 1, -1))
        add(f"z6_{tag}.veq", f"Z6, inversion as {tag}, z0 = 1: no nonzero solution",
            make_cyclic_group(6), kind, neg(6), 1)
        add(f"z8_{tag}_z2.veq", f"Z8, inversion as {tag}, z0 = 2: two solutions with irrational values",
            make_cyclic_group(8), kind, neg(8), 2)
        add(f"z2_{tag}_z1.veq", f"Z2, inversion as {tag}, z0 = 1: no nonzero solution",
            make_cyclic_group(2), kind, neg(2), 1)
        v4 = make_direct_product(make_cyclic_group(2), make_cyclic_group(2))
        add(f"klein_{tag}_mu.veq", f"Klein four-group, identity map as {tag}, z0 = (x1,x0), mu(a,b) = (-1)^a",
            v4, kind, tuple(range(4)), 2, signs(1, 1, -1, -1))

    add("z2_tau_z0.veq", "Z2, inversion, z0 = identity: no nonzero solution",
        make_cyclic_group(2), TAU, neg(2), 0)

    q8 = make_quaternion()
    inv = q8.inverses()
    add("q8_tau.veq", "Q8, inversion, z0 = -1, mu = 1: non-abelian, no nonzero solution",
        q8, TAU, inv, q8.index_of("-1"))

    d4 = make_dihedral(4)
    add("d4_tau.veq", "D4, inversion, z0 = r2, mu = 1: non-abelian, no nonzero solution",
        d4, TAU, d4.inverses(), d4.index_of("r2"))
    s_ = d4.index_of("s")
    conj = tuple(d4.mul(s_, x, s_) for x in d4.elements())
    add("d4_sigma.veq", "D4, conjugation by s as sigma, z0 = r2, mu = 1: no nonzero solution",
        d4, SIGMA, conj, d4.index_of("r2"))

    z4 = make_cyclic_group(4)
    prod = make_direct_product(d4, z4)
    z0 = prod.index_of("(e,x1)")
    add("d4xz4_tau.veq", "D4 x Z4, inversion, z0 = (e,x1): non-abelian with four solutions",
        prod, TAU, prod.inverses(), z0)
    sig = tuple(conj[x // 4] * 4 + (-(x % 4)) % 4 for x in prod.elements())
    add("d4xz4_sigma.veq", "D4 x Z4, sigma = (conjugation by s) x (negation), z0 = (e,x1)",
        prod, SIGMA, sig, z0)

    zn = make_direct_product(z4, make_null_semigroup())
    tau = tuple(((-(x // 2)) % 4) * 2 + x % 2 for x in zn.elements())
    add("z4xnull_tau.veq", "Z4 x null semigroup {a, 0}: commutative, no identity, one solution",
        zn, TAU, tau, zn.index_of("(x1,a)"))

    lz = make_left_zero(2)
    add("leftzero2_sigma.veq", "left-zero semigroup of order 2 with sigma: rejected (no identity, empty center)",
        lz, SIGMA, (0, 1), 0)

    add("z3_discover.veq", "Z3 without a morphism: analyze enumerates the candidates",
        make_cyclic_group(3), TAU, None, 1)
    add("z4_dalembert.veq", "Z4, inversion, mu = 1: the d'Alembert equation",
        z4, TAU, neg(4), 1, family="dalembert")
    return out


def main(target: str = "corpus") -> None:
    root = Path(target)
    root.mkdir(exist_ok=True)
    for fname, (comment, f) in sorted(build().items()):
        (root / fname).write_text(f"# {comment}\n" + print_instance(f))


if __name__ == "__main__":
    main(*sys.argv[1:])
