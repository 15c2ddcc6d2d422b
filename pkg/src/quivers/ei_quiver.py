"""
Finite EI quivers (Q, X), their doubles and path bisets.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import QuiverError
from src.groups.bisets import (
    Biset,
    Pair,
    biset_product,
    dual_biset,
    is_action_free,
    make_biset,
    regular_biset,
)
from src.groups.groups import FiniteGroup, trivial_group
from src.quivers.quiver import Path, Quiver
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class EIQuiver:
    """
    A quiver with a group X(i) per vertex and an (X(t(a)), X(s(a)))-biset X(a) per arrow.

    On a double, arrows ``n_original + a`` are the reversed arrows a* and
    carry star-degree one.
    """

    quiver: Quiver
    groups: Tuple[FiniteGroup, ...]
    bisets: Tuple[Biset, ...]
    n_original: Optional[int] = None

    @property
    def is_double(self) -> bool:
        return self.n_original is not None

    def is_star(self, a: int) -> bool:
        return self.n_original is not None and a >= self.n_original

    def dual_arrow(self, a: int) -> int:
        if self.n_original is None:
            raise QuiverError("only a double EI quiver has reversed arrows")
        return a + self.n_original if a < self.n_original else a - self.n_original

    def star_weights(self) -> List[int]:
        return [1 if self.is_star(a) else 0 for a in range(self.quiver.n_arrows)]

    def star_degree(self, p: Path) -> int:
        return sum(1 for a in p.arrows if self.is_star(a))

    def is_action_free(self) -> bool:
        return all(all(is_action_free(biset)) for biset in self.bisets)

    def validate(self) -> Tuple[bool, Optional[str]]:
        q = self.quiver
        if len(self.groups) != q.n_vertices:
            return False, f"expected {q.n_vertices} vertex groups, got {len(self.groups)}"
        if len(self.bisets) != q.n_arrows:
            return False, f"expected {q.n_arrows} arrow bisets, got {len(self.bisets)}"
        for a, biset in enumerate(self.bisets):
            arrow = q.arrows[a]
            if biset.left_group != self.groups[arrow.target]:
                return False, f"X({arrow.name}) must be acted on the left by X({arrow.target + 1})"
            if biset.right_group != self.groups[arrow.source]:
                return False, f"X({arrow.name}) must be acted on the right by X({arrow.source + 1})"
            ok, error = biset.check_axioms()
            if not ok:
                return False, f"X({arrow.name}): {error}"
        return True, None


def make_ei_quiver(quiver: Quiver, groups: Sequence[FiniteGroup], bisets: Sequence[Biset]) -> EIQuiver:
    """
    Build and validate an EI quiver.

    Raises:
        QuiverError: group endpoints do not match or a biset is invalid
    """
    ei_quiver = EIQuiver(quiver, tuple(groups), tuple(bisets))
    ok, error = ei_quiver.validate()
    if not ok:
        raise QuiverError(error)
    return ei_quiver


def trivial_assignment(quiver: Quiver) -> EIQuiver:
    """Trivial groups and singleton bisets: the category is the path category of Q."""
    one = trivial_group()
    bisets = []
    for arrow in quiver.arrows:
        bisets.append(make_biset(one, one, [[0]], [[0]], [arrow.name]))
    return EIQuiver(quiver, tuple(one for _ in quiver.vertices()), tuple(bisets))


def double_ei_quiver(ei_quiver: EIQuiver) -> EIQuiver:
    """
    The double (Q-bar, X-bar) with X-bar(a*) the dual of X(a).

    Raises:
        QuiverError: the quiver has an oriented cycle
    """
    if not ei_quiver.quiver.is_acyclic():
        raise QuiverError("the double is only defined for acyclic EI quivers")
    doubled = ei_quiver.quiver.double()
    bisets = tuple(ei_quiver.bisets) + tuple(dual_biset(b) for b in ei_quiver.bisets)
    return EIQuiver(doubled, ei_quiver.groups, bisets, n_original=ei_quiver.quiver.n_arrows)


@dataclass
class PathBisetData:
    """
    X(p) with the canonical arrow-element tuple of each element.

    ``stages[k]`` glues the class of the first k+1 factors with the next
    element; folding a tuple through the stages gives its element index.
    """

    biset: Biset
    tuples: List[Tuple[int, ...]]
    stages: List[Dict[Pair, int]] = field(default_factory=list)

    def fold(self, elements: Sequence[int]) -> int:
        index = elements[0]
        for stage, x in zip(self.stages, elements[1:]):
            index = stage[(index, x)]
        return index


class PathBisets:
    """Memoised path bisets of one EI quiver, built left-associated."""

    def __init__(self, ei_quiver: EIQuiver):
        self.ei_quiver = ei_quiver
        self._cache: Dict[Tuple[Tuple[int, ...], int], PathBisetData] = {}

    def get(self, p: Path) -> PathBisetData:
        key = (p.arrows, p.source)
        if key in self._cache:
            return self._cache[key]

        if p.is_trivial:
            group = self.ei_quiver.groups[p.source]
            data = PathBisetData(regular_biset(group), [(g,) for g in group.elements()])
        elif p.length == 1:
            biset = self.ei_quiver.bisets[p.arrows[0]]
            data = PathBisetData(biset, [(x,) for x in range(biset.size)])
        else:
            q = self.ei_quiver.quiver
            head = Path(p.arrows[:-1], q.target(p.arrows[-1]), p.target)
            prefix = self.get(head)
            last = self.ei_quiver.bisets[p.arrows[-1]]
            product = biset_product(prefix.biset, last)
            tuples = [prefix.tuples[c] + (x,) for c, x in product.representatives]
            data = PathBisetData(product.biset, tuples, prefix.stages + [product.class_of])

        self._cache[key] = data
        return data


def path_biset(ei_quiver: EIQuiver, p: Path) -> Biset:
    """
    X(p) = X(a_n) x ... x X(a_1), left-associated; X(e_i) is the regular X(i)-biset.

    Raises:
        QuiverError: p uses an arrow outside the quiver
    """
    if any(not 0 <= a < ei_quiver.quiver.n_arrows for a in p.arrows):
        raise QuiverError(f"path {p} uses an unknown arrow")
    if p.arrows:
        ei_quiver.quiver.path(p.arrows)
    return PathBisets(ei_quiver).get(p).biset
