"""
Finite groups, homomorphisms and bisets.
"""

from src.groups.bisets import (
    Biset,
    BisetProduct,
    biset_from_embeddings,
    biset_product,
    dual_biset,
    is_action_free,
    make_biset,
    orbit_reps,
    regular_biset,
    trivial_action_biset,
)
from src.groups.groups import (
    FiniteGroup,
    GroupHom,
    cyclic_embedding,
    cyclic_group,
    group_from_table,
    make_hom,
    trivial_group,
)

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "cyclic_group",
    "trivial_group",
    "group_from_table",
    "make_hom",
    "cyclic_embedding",
    "Biset",
    "BisetProduct",
    "make_biset",
    "regular_biset",
    "trivial_action_biset",
    "dual_biset",
    "biset_product",
    "is_action_free",
    "orbit_reps",
    "biset_from_embeddings",
]
