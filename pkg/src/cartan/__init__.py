"""
Cartan triples, their quivers and algebras, and the comparison of the two preprojective algebras of Cartan type.
"""

from src.cartan.algebras import algebra_H, gls_preprojective, gls_relations, h_relations, relation_names
from src.cartan.quivers import CartanQuivers, build_cartan_quivers, build_quivers, cartan_ei_quiver
from src.cartan.comparison import CartanComparison, compare_cartan_sides, compare_cartan_sides_async
from src.cartan.triple import (
    CartanTriple,
    DerivedTriple,
    cartan_violations,
    derived_triple,
    gij_fij,
    is_prime_power_case,
    validate_cartan,
)

__all__ = [
    "algebra_H",
    "gls_preprojective",
    "gls_relations",
    "h_relations",
    "relation_names",
    "CartanQuivers",
    "build_cartan_quivers",
    "build_quivers",
    "cartan_ei_quiver",
    "CartanComparison",
    "compare_cartan_sides",
    "compare_cartan_sides_async",
    "CartanTriple",
    "DerivedTriple",
    "cartan_violations",
    "derived_triple",
    "gij_fij",
    "is_prime_power_case",
    "validate_cartan",
]
