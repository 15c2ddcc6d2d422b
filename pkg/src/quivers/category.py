"""
The free EI category C(Q, X) and its truncations.

A morphism is a pair (path p, element of X(p)). Morphisms are numbered by
(length, path, element index). Composition concatenates canonical tuples and
folds the result back through the path biset of the composite path.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import settings
from src.errors import QuiverError
from src.quivers.ei_quiver import EIQuiver, PathBisetData, PathBisets
from src.quivers.quiver import Path
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Morphism:
    path: Path
    element: int

    @property
    def source(self) -> int:
        return self.path.source

    @property
    def target(self) -> int:
        return self.path.target


class EICategory:
    """
    Morphism basis and composition of C(Q, X), optionally truncated.

    Args:
        ei_quiver: The EI quiver
        max_length: Length cap; None means all paths of an acyclic quiver
        weights: Optional arrow weights (e.g. star-degree)
        max_weight: Cap on the total weight of a path
    """

    def __init__(
        self,
        ei_quiver: EIQuiver,
        max_length: Optional[int] = None,
        weights: Optional[Sequence[int]] = None,
        max_weight: Optional[int] = None,
    ):
        quiver = ei_quiver.quiver
        if max_length is None:
            if not quiver.is_acyclic():
                raise QuiverError("C(Q, X) is infinite for a quiver with cycles; use a truncation")
            max_length = quiver.longest_path_length()
        if max_length > settings.engine.max_path_length:
            raise QuiverError(
                f"length cap {max_length} exceeds EIPRE_MAX_PATH_LENGTH={settings.engine.max_path_length}"
            )

        self.ei_quiver = ei_quiver
        self.max_length = max_length
        self.weights = list(weights) if weights is not None else None
        self.max_weight = max_weight
        self.path_bisets = PathBisets(ei_quiver)

        self.paths: List[Path] = [
            p for layer in quiver.paths_up_to(max_length, self.weights, max_weight) for p in layer
        ]
        self.morphisms: List[Morphism] = []
        self._index: Dict[Tuple[Tuple[int, ...], int, int], int] = {}
        for p in self.paths:
            data = self.path_bisets.get(p)
            for x in range(data.biset.size):
                self._index[(p.arrows, p.source, x)] = len(self.morphisms)
                self.morphisms.append(Morphism(p, x))
        self._compositions: Dict[Tuple[int, int], Optional[int]] = {}

        logger.debug(
            f"Category with {len(self.paths)} paths and {len(self.morphisms)} morphisms "
            f"(length <= {max_length}, weight <= {max_weight})"
        )

    @property
    def n_objects(self) -> int:
        return self.ei_quiver.quiver.n_vertices

    def __len__(self) -> int:
        return len(self.morphisms)

    def index(self, p: Path, element: int) -> Optional[int]:
        return self._index.get((p.arrows, p.source, element))

    def identity(self, x: int) -> int:
        return self._index[((), x, 0)]

    def path_data(self, p: Path) -> PathBisetData:
        return self.path_bisets.get(p)

    def weight(self, m: int) -> int:
        path = self.morphisms[m].path
        if self.weights is None:
            return path.length
        return sum(self.weights[a] for a in path.arrows)

    def hom(self, x: int, y: int) -> List[int]:
        """Basis morphisms x -> y."""
        return [k for k, m in enumerate(self.morphisms) if m.source == x and m.target == y]

    def label(self, m: int) -> str:
        morphism = self.morphisms[m]
        p = morphism.path
        if p.is_trivial:
            group = self.ei_quiver.groups[p.source]
            name = group.label(morphism.element)
            return f"e{p.source + 1}" if morphism.element == 0 else f"{name}e{p.source + 1}"
        return self.path_bisets.get(p).biset.label(morphism.element)

    def compose(self, f: int, g: int) -> Optional[int]:
        """
        The basis morphism f o g, or None when s(f) != t(g) or f o g is outside the truncation.
        """
        key = (f, g)
        if key in self._compositions:
            return self._compositions[key]
        result = self._compose(self.morphisms[f], self.morphisms[g])
        self._compositions[key] = result
        return result

    def _compose(self, f: Morphism, g: Morphism) -> Optional[int]:
        if f.source != g.target:
            return None
        p, q = f.path, g.path
        if p.is_trivial:
            data = self.path_bisets.get(q)
            return self.index(q, data.biset.act_left(f.element, g.element))
        if q.is_trivial:
            data = self.path_bisets.get(p)
            return self.index(p, data.biset.act_right(f.element, g.element))

        composite = Path(p.arrows + q.arrows, q.source, p.target)
        if composite.length > self.max_length:
            return None
        if self.weights is not None and self.max_weight is not None:
            if sum(self.weights[a] for a in composite.arrows) > self.max_weight:
                return None
        elements = self.path_bisets.get(p).tuples[f.element] + self.path_bisets.get(q).tuples[g.element]
        return self.index(composite, self.path_bisets.get(composite).fold(elements))

    def check_associativity(self, limit: Optional[int] = None) -> Tuple[bool, Optional[str]]:
        """
        Exhaustive (f g) h = f (g h) over composable triples when the basis is small.
        """
        limit = settings.engine.associativity_check_limit if limit is None else limit
        n = len(self.morphisms)
        if n > limit:
            return True, None
        for f in range(n):
            for g in range(n):
                fg = self.compose(f, g)
                if fg is None:
                    continue
                for h in range(n):
                    gh = self.compose(g, h)
                    if gh is None:
                        continue
                    left, right = self.compose(fg, h), self.compose(f, gh)
                    if left is not None and right is not None and left != right:
                        return False, f"composition not associative at ({f},{g},{h})"
        return True, None


def build_category(ei_quiver: EIQuiver) -> EICategory:
    """
    The finite category C(Q, X) of an acyclic EI quiver.

    Raises:
        QuiverError: the quiver has an oriented cycle
    """
    category = EICategory(ei_quiver)
    logger.info(f"Built C(Q,X) with {len(category)} morphisms")
    return category


def truncated_category(
    ei_quiver: EIQuiver,
    n: int,
    weights: Optional[Sequence[int]] = None,
    max_weight: Optional[int] = None,
) -> EICategory:
    """Morphisms over paths of length <= n (and weight <= max_weight)."""
    if n < 0:
        raise QuiverError(f"length cap must be nonnegative, got {n}")
    return EICategory(ei_quiver, max_length=n, weights=weights, max_weight=max_weight)


def per_length_dimensions(category: EICategory) -> List[int]:
    dims = [0] * (category.max_length + 1)
    for m in category.morphisms:
        dims[m.path.length] += 1
    return dims
