"""
Per-job computation context.

Holds the field, the EI quiver (or Cartan triple) of a job, the algebras
built from it and the seeded random streams used by randomized checks.
"""

import random
from typing import Any, Dict, List, Optional

from src.cartan.quivers import cartan_ei_quiver
from src.cartan.triple import CartanTriple
from src.config import settings
from src.errors import HypothesisError
from src.homology.representations import (
    QuiverAlgebras,
    Representation,
    is_locally_projective,
    quiver_algebras,
    random_representation,
)
from src.quivers.ei_quiver import EIQuiver
from src.scalars.fields import FieldDescriptor
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ComputationContext:
    """
    Everything a verifier needs about one job.

    Random streams are keyed by purpose, so adding a check does not shift the
    draws of another and reports stay byte-identical for a fixed seed.
    """

    def __init__(
        self,
        field: FieldDescriptor,
        ei_quiver: Optional[EIQuiver] = None,
        triple: Optional[CartanTriple] = None,
        seed: Optional[int] = None,
        maxdeg: Optional[int] = None,
        representations: Optional[List[Representation]] = None,
        n_random: Optional[int] = None,
    ):
        self.field = field
        self.triple = triple
        self._ei_quiver = ei_quiver
        self.seed = settings.verification.seed if seed is None else seed
        self.maxdeg = settings.engine.default_maxdeg if maxdeg is None else maxdeg
        self.n_random = settings.verification.random_modules if n_random is None else n_random
        self._explicit = list(representations or [])
        self._cache: Dict[str, Any] = {}

    @property
    def ei_quiver(self) -> EIQuiver:
        """The job's EI quiver; for a Cartan triple, the EI quiver of Cartan type."""
        if self._ei_quiver is None:
            if self.triple is None:
                raise HypothesisError("the job carries neither an EI quiver nor a Cartan triple")
            self._ei_quiver = cartan_ei_quiver(self.triple)
        return self._ei_quiver

    @property
    def algebras(self) -> QuiverAlgebras:
        if "algebras" not in self._cache:
            self._cache["algebras"] = quiver_algebras(self.ei_quiver, self.field)
            logger.info(f"KC built with dimension {self._cache['algebras'].algebra.dim}")
        return self._cache["algebras"]

    def rng(self, purpose: str) -> random.Random:
        return random.Random(f"{self.seed}:{purpose}")

    def require_action_free(self) -> None:
        """
        Raises:
            HypothesisError: some arrow biset is not free on both sides
        """
        if not self.ei_quiver.is_action_free():
            raise HypothesisError("the assignment X is not action-free")

    def set(self, key: str, value: Any) -> None:
        self._cache[key] = value
        logger.debug(f"context cached {key}")

    def get(self, key: str, default: Any = None) -> Any:
        return self._cache.get(key, default)

    def add_representations(self, representations: List[Representation]) -> None:
        """Append explicit representations; cached suites are dropped."""
        self._explicit.extend(representations)
        for key in [k for k in self._cache if k.startswith("suite:")]:
            del self._cache[key]

    def module_suite(self, locally_projective: bool = True) -> List[Representation]:
        """
        Explicit representations of the job followed by random ones.

        With ``locally_projective=False`` the random half of the suite mixes
        locally projective modules with ones that carry trivial vertex
        modules where the characteristic divides the group order.
        """
        key = f"suite:{locally_projective}"
        if key in self._cache:
            return self._cache[key]
        rng = self.rng(key)
        suite = [rep for rep in self._explicit if not locally_projective or is_locally_projective(rep)]
        for k in range(self.n_random):
            lp = locally_projective or k % 2 == 0
            suite.append(random_representation(self.algebras, rng, locally_projective=lp, name=f"M{k + 1}"))
        self._cache[key] = suite
        logger.debug(f"module suite of {len(suite)} representations (locally projective only: {locally_projective})")
        return suite

    def __repr__(self) -> str:
        return f"ComputationContext(field={self.field.label()}, seed={self.seed}, maxdeg={self.maxdeg})"
