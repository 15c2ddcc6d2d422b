"""
Quivers, finite EI quivers and their free categories.
"""

from src.quivers.category import EICategory, Morphism, build_category, per_length_dimensions, truncated_category
from src.quivers.ei_quiver import (
    EIQuiver,
    PathBisets,
    double_ei_quiver,
    make_ei_quiver,
    path_biset,
    trivial_assignment,
)
from src.quivers.quiver import Arrow, Path, Quiver, make_quiver

__all__ = [
    "Arrow",
    "Path",
    "Quiver",
    "make_quiver",
    "EIQuiver",
    "PathBisets",
    "make_ei_quiver",
    "trivial_assignment",
    "double_ei_quiver",
    "path_biset",
    "EICategory",
    "Morphism",
    "build_category",
    "truncated_category",
    "per_length_dimensions",
]
