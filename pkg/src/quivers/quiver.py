"""
Finite quivers and their paths.

Vertices are 0-based internally and shown 1-based. A path is written from
right to left: ``Path.arrows == (a_n, ..., a_1)`` traverses a_1 first, and the
concatenation p.q (q first, then p) has arrows ``p.arrows + q.arrows``.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import QuiverError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path a_n ... a_1 from ``source`` to ``target``; length 0 is e_source."""

    arrows: Tuple[int, ...]
    source: int
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self) -> Tuple:
        return (len(self.arrows), self.arrows, self.source)


class Quiver:
    """A finite quiver Q = (Q0, Q1, s, t)."""

    def __init__(self, n_vertices: int, arrows: Sequence[Arrow]):
        if n_vertices < 0:
            raise QuiverError(f"vertex count must be nonnegative, got {n_vertices}")
        for arrow in arrows:
            if not (0 <= arrow.source < n_vertices and 0 <= arrow.target < n_vertices):
                raise QuiverError(f"arrow {arrow.name} has an endpoint out of range")
        names = [arrow.name for arrow in arrows]
        if len(set(names)) != len(names):
            raise QuiverError("arrow names must be unique")
        self.n_vertices = n_vertices
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)
        self._by_name: Dict[str, int] = {arrow.name: a for a, arrow in enumerate(self.arrows)}

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def vertices(self) -> range:
        return range(self.n_vertices)

    def arrow_index(self, name: str) -> int:
        if name not in self._by_name:
            raise QuiverError(f"unknown arrow {name!r}")
        return self._by_name[name]

    def source(self, a: int) -> int:
        return self.arrows[a].source

    def target(self, a: int) -> int:
        return self.arrows[a].target

    def arrows_from(self, i: int) -> List[int]:
        return [a for a, arrow in enumerate(self.arrows) if arrow.source == i]

    def trivial_path(self, i: int) -> Path:
        return Path((), i, i)

    def path(self, arrows: Sequence[int]) -> Path:
        """
        Build the path a_n ... a_1 from arrow indices in written order.

        Raises:
            QuiverError: consecutive arrows are not composable
        """
        arrows = tuple(arrows)
        if not arrows:
            raise QuiverError("use trivial_path for paths of length 0")
        for later, earlier in zip(arrows, arrows[1:]):
            if self.source(later) != self.target(earlier):
                raise QuiverError(
                    f"{self.arrows[later].name} cannot follow {self.arrows[earlier].name}"
                )
        return Path(arrows, self.source(arrows[-1]), self.target(arrows[0]))

    def path_name(self, p: Path) -> str:
        if p.is_trivial:
            return f"e{p.source + 1}"
        return "".join(self.arrows[a].name for a in p.arrows)

    def topological_order(self) -> Optional[List[int]]:
        """Vertices ordered so arrows go forward, or None when Q has a cycle."""
        indegree = [0] * self.n_vertices
        for arrow in self.arrows:
            indegree[arrow.target] += 1
        queue = deque(i for i in self.vertices() if indegree[i] == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for a in self.arrows_from(i):
                j = self.target(a)
                indegree[j] -= 1
                if indegree[j] == 0:
                    queue.append(j)
        return order if len(order) == self.n_vertices else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def longest_path_length(self) -> int:
        """
        Length of a longest path.

        Raises:
            QuiverError: Q has a cycle
        """
        order = self.topological_order()
        if order is None:
            raise QuiverError("quiver has an oriented cycle")
        longest = [0] * self.n_vertices
        for i in order:
            for a in self.arrows_from(i):
                j = self.target(a)
                longest[j] = max(longest[j], longest[i] + 1)
        return max(longest, default=0)

    def paths_up_to(
        self,
        n: int,
        weights: Optional[Sequence[int]] = None,
        max_weight: Optional[int] = None,
    ) -> List[List[Path]]:
        """
        All paths of length <= n, grouped by length.

        Args:
            n: Length cap
            weights: Optional weight per arrow
            max_weight: Optional cap on the total weight of a path

        Returns:
            One list per length 0..n, each sorted lexicographically in arrow ids
        """
        if n < 0:
            raise QuiverError(f"length cap must be nonnegative, got {n}")
        layers: List[List[Path]] = [[self.trivial_path(i) for i in self.vertices()]]
        for _ in range(n):
            extended = []
            for p in layers[-1]:
                weight = self.path_weight(p, weights)
                for a in self.arrows_from(p.target):
                    if max_weight is not None and weights is not None and weight + weights[a] > max_weight:
                        continue
                    extended.append(Path((a,) + p.arrows, p.source, self.target(a)))
            extended.sort()
            layers.append(extended)
        return layers

    @staticmethod
    def path_weight(p: Path, weights: Optional[Sequence[int]]) -> int:
        if weights is None:
            return p.length
        return sum(weights[a] for a in p.arrows)

    def double(self) -> "Quiver":
        """
        The double quiver: arrow m + a is the reverse a* of arrow a.
        """
        reverse = [Arrow(f"{arrow.name}*", arrow.target, arrow.source) for arrow in self.arrows]
        return Quiver(self.n_vertices, list(self.arrows) + reverse)

    def __repr__(self) -> str:
        return f"Quiver(vertices={self.n_vertices}, arrows={[a.name for a in self.arrows]})"


def make_quiver(n_vertices: int, arrows: Sequence[Tuple[str, int, int]]) -> Quiver:
    """Build a quiver from (name, source, target) triples with 0-based vertices."""
    return Quiver(n_vertices, [Arrow(name, s, t) for name, s, t in arrows])
