"""Exact solutions of mu-twisted Van Vleck equations on finite semigroups."""

from .characters import Character, admissible_mus, element_profiles, enumerate_characters, twist
from .cyclo import Cyclo, cyclotomic_polynomial, parse_literal, root_of_unity, to_float
from .engine import (
    Equation,
    Instance,
    InstanceError,
    Solution,
    brute_force_solutions,
    check_identities,
    construct_solution,
    dalembert_from_character,
    enumerate_solutions,
    g_from_f,
    resolve_sigma_sign,
    verify_equation,
)
from .semigroup import FiniteSemigroup, Morphism, MorphismKind, center, enumerate_morphisms, find_identity

__all__ = [
    "admissible_mus",
    "brute_force_solutions",
    "center",
    "Character",
    "check_identities",
    "construct_solution",
    "Cyclo",
    "cyclotomic_polynomial",
    "dalembert_from_character",
    "element_profiles",
    "enumerate_characters",
    "enumerate_morphisms",
    "enumerate_solutions",
    "Equation",
    "find_identity",
    "FiniteSemigroup",
    "g_from_f",
    "Instance",
    "InstanceError",
    "Morphism",
    "MorphismKind",
    "parse_literal",
    "resolve_sigma_sign",
    "root_of_unity",
    "Solution",
    "to_float",
    "twist",
    "verify_equation",
]

__version__ = "0.1.0"
