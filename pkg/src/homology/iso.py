"""
Probabilistic isomorphism checks for modules and bimodules.

Invariants that differ prove non-isomorphism; an invertible random
homomorphism proves isomorphism. Anything else is reported as not certified.
"""

import random
from enum import Enum
from typing import List, Optional, Sequence

from src.algebra.bimodule import Bimodule, bimodule_hom_space
from src.algebra.modules import LeftModule, hom_space, is_isomorphism
from src.config import settings
from src.errors import ModuleError
from src.homology.radical import top_dimension_vector
from src.scalars.linalg import Matrix, mat_add, mat_scale, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)


class IsoVerdict(str, Enum):
    """Outcome of an isomorphism check."""

    ISO = "iso"
    NOT_ISO = "not-iso"
    NOT_CERTIFIED = "not-certified"


def random_combination(field, basis: Sequence[Matrix], n_rows: int, n_cols: int, rng: random.Random) -> Matrix:
    out = zeros(field, n_rows, n_cols)
    for matrix in basis:
        out = mat_add(field, out, mat_scale(field, field.random_element(rng), matrix))
    return out


def _search(field, basis: List[Matrix], dim: int, rng: random.Random, retries: int, label: str) -> "IsoVerdict":
    if not basis:
        return IsoVerdict.NOT_ISO
    for attempt in range(retries):
        candidate = random_combination(field, basis, dim, dim, rng)
        if is_isomorphism(field, candidate, dim):
            logger.debug(f"{label}: invertible homomorphism found on attempt {attempt + 1}")
            return IsoVerdict.ISO
    logger.warning(f"{label}: no invertible homomorphism in {retries} draws")
    return IsoVerdict.NOT_CERTIFIED


def module_iso_check(
    first: LeftModule,
    second: LeftModule,
    rng: Optional[random.Random] = None,
    retries: Optional[int] = None,
) -> IsoVerdict:
    """
    Decide M ≅ N as far as cheaply possible.

    Raises:
        ModuleError: the modules live over different algebras
    """
    if first.algebra is not second.algebra:
        raise ModuleError("isomorphism check needs modules over one algebra")
    label = f"{first.name} ≅ {second.name}"
    if first.dimension_vector() != second.dimension_vector():
        return IsoVerdict.NOT_ISO
    if first.dim == 0:
        return IsoVerdict.ISO
    if top_dimension_vector(first) != top_dimension_vector(second):
        return IsoVerdict.NOT_ISO
    forward = hom_space(first, second)
    profile = [len(hom_space(first, first)), len(forward), len(hom_space(second, first)), len(hom_space(second, second))]
    if len(set(profile)) != 1:
        logger.debug(f"{label}: Hom dimension profile {profile}")
        return IsoVerdict.NOT_ISO
    rng = rng or random.Random(settings.verification.seed)
    return _search(first.field, forward, first.dim, rng, retries or settings.verification.iso_retries, label)


def bimodule_iso_check(
    first: Bimodule,
    second: Bimodule,
    rng: Optional[random.Random] = None,
    retries: Optional[int] = None,
) -> IsoVerdict:
    """
    Decide B ≅ B' for bimodules over the same pair of algebras.

    Raises:
        ModuleError: the bimodules live over different algebras
    """
    if first.left_algebra is not second.left_algebra or first.right_algebra is not second.right_algebra:
        raise ModuleError("isomorphism check needs bimodules over one pair of algebras")
    label = f"{first.name} ≅ {second.name}"
    if first.block_dims() != second.block_dims():
        return IsoVerdict.NOT_ISO
    if first.dim == 0:
        return IsoVerdict.ISO
    forward = bimodule_hom_space(first, second)
    profile = [len(bimodule_hom_space(first, first)), len(forward), len(bimodule_hom_space(second, first))]
    if len(set(profile)) != 1:
        logger.debug(f"{label}: Hom dimension profile {profile}")
        return IsoVerdict.NOT_ISO
    rng = rng or random.Random(settings.verification.seed)
    return _search(first.field, forward, first.dim, rng, retries or settings.verification.iso_retries, label)
