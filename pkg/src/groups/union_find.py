"""
Disjoint-set forest used to form quotient sets such as X x_G Y.
"""

import collections
from typing import Dict, Generic, Hashable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find with path compression and union by rank."""

    def __init__(self):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}

    def make_set(self, e: T) -> None:
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, x: T, y: T) -> None:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def classes(self) -> List[List[T]]:
        """
        Equivalence classes, each sorted, ordered by their minimal element.

        The minimal element of a class is its canonical representative.
        """
        groups = collections.defaultdict(list)
        for e in self.parent:
            groups[self.find(e)].append(e)
        return sorted((sorted(members) for members in groups.values()), key=lambda members: members[0])
