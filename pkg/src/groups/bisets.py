"""
Bisets: finite sets with commuting left and right group actions.

A (G1, G2)-biset stores ``left[g1][x]`` and ``right[x][g2]`` as dense tables.
Quotients such as X x_G Y are formed with a disjoint-set forest and every class
is represented by its lexicographically smallest member, so element indices
are deterministic.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import BisetError, GroupError
from src.groups.groups import FiniteGroup, GroupHom
from src.groups.union_find import DisjointSet
from src.utils.logger import get_logger

logger = get_logger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Biset:
    """A (left_group, right_group)-biset with labelled elements."""

    left_group: FiniteGroup
    right_group: FiniteGroup
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def act_left(self, g: int, x: int) -> int:
        return self.left[g][x]

    def act_right(self, x: int, g: int) -> int:
        return self.right[x][g]

    def label(self, x: int) -> str:
        return self.labels[x]

    def check_axioms(self) -> Tuple[bool, Optional[str]]:
        """
        Check both action laws and the compatibility (g1 x) g2 = g1 (x g2).

        Returns:
            Tuple of (is_valid, error_message)
        """
        g1, g2, n = self.left_group, self.right_group, self.size
        if n == 0:
            return False, "biset is empty"
        if len(self.left) != g1.order or any(len(row) != n for row in self.left):
            return False, "left action table has the wrong shape"
        if len(self.right) != n or any(len(row) != g2.order for row in self.right):
            return False, "right action table has the wrong shape"
        for row in list(self.left) + list(self.right):
            if any(not 0 <= y < n for y in row):
                return False, "action table entry out of range"

        for x in range(n):
            if self.left[0][x] != x or self.right[x][0] != x:
                return False, f"identity does not fix element {x}"
            for a in g1.elements():
                for b in g1.elements():
                    if self.left[g1.mul(a, b)][x] != self.left[a][self.left[b][x]]:
                        return False, f"left action law fails at ({a},{b},{x})"
            for a in g2.elements():
                for b in g2.elements():
                    if self.right[x][g2.mul(a, b)] != self.right[self.right[x][a]][b]:
                        return False, f"right action law fails at ({x},{a},{b})"
            for a in g1.elements():
                for b in g2.elements():
                    if self.right[self.left[a][x]][b] != self.left[a][self.right[x][b]]:
                        return False, f"actions do not commute at ({a},{x},{b})"
        return True, None

    def __repr__(self) -> str:
        return f"Biset({self.left_group.name},{self.right_group.name}; size={self.size})"


@dataclass(frozen=True)
class BisetProduct:
    """The product biset with the class of every pair and each class representative."""

    biset: Biset
    class_of: Dict[Pair, int]
    representatives: Tuple[Pair, ...]


def make_biset(
    left_group: FiniteGroup,
    right_group: FiniteGroup,
    left: Sequence[Sequence[int]],
    right: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> Biset:
    """
    Build a biset from action tables, checking the axioms.

    Raises:
        BisetError: action laws, compatibility or shape fail
    """
    size = len(right)
    if labels is None:
        labels = [f"x{k}" for k in range(size)]
    biset = Biset(
        left_group,
        right_group,
        tuple(tuple(row) for row in left),
        tuple(tuple(row) for row in right),
        tuple(labels),
    )
    ok, error = biset.check_axioms()
    if not ok:
        raise BisetError(error)
    return biset


def regular_biset(group: FiniteGroup) -> Biset:
    """G acting on itself by left and right multiplication."""
    left = tuple(tuple(group.mul(g, x) for x in group.elements()) for g in group.elements())
    right = tuple(tuple(group.mul(x, g) for g in group.elements()) for x in group.elements())
    return Biset(group, group, left, right, group.labels)


def trivial_action_biset(left_group: FiniteGroup, right_group: FiniteGroup, size: int) -> Biset:
    """A set of the given size on which both groups act trivially."""
    left = tuple(tuple(range(size)) for _ in left_group.elements())
    right = tuple(tuple(x for _ in right_group.elements()) for x in range(size))
    return make_biset(left_group, right_group, left, right, [f"x{k}" for k in range(size)])


def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else f"{label}*"


def dual_biset(biset: Biset) -> Biset:
    """
    The dual (G2, G1)-biset on the same index set.

    x*.g1 = (g1^-1 x)* and g2.x* = (x g2^-1)*, so taking the dual twice
    returns the original tables.
    """
    g1, g2 = biset.left_group, biset.right_group
    left = tuple(
        tuple(biset.right[x][g2.inv(h)] for x in range(biset.size))
        for h in g2.elements()
    )
    right = tuple(
        tuple(biset.left[g1.inv(g)][x] for g in g1.elements())
        for x in range(biset.size)
    )
    return Biset(g2, g1, left, right, tuple(_dual_label(label) for label in biset.labels))


def _quotient_classes(forest: DisjointSet, pairs: Sequence[Pair]) -> Tuple[List[Pair], Dict[Pair, int]]:
    for pair in pairs:
        forest.make_set(pair)
    classes = forest.classes()
    representatives = [members[0] for members in classes]
    class_of = {member: k for k, members in enumerate(classes) for member in members}
    return representatives, class_of


def biset_product(x_set: Biset, y_set: Biset) -> BisetProduct:
    """
    X x_G Y = (X x Y) / ((x, g y) ~ (x g, y)).

    Args:
        x_set: (G1, G)-biset
        y_set: (G, G3)-biset

    Returns:
        BisetProduct holding the (G1, G3)-biset, the class of every pair and
        the lexicographically smallest pair of each class, classes numbered in
        the order of their representatives

    Raises:
        BisetError: the right group of X is not the left group of Y
    """
    middle = x_set.right_group
    if middle != y_set.left_group:
        raise BisetError(
            f"cannot glue {x_set!r} and {y_set!r}: {middle.name} != {y_set.left_group.name}"
        )

    pairs = [(x, y) for x in range(x_set.size) for y in range(y_set.size)]
    forest: DisjointSet[Pair] = DisjointSet()
    for x, y in pairs:
        for g in middle.elements():
            forest.union((x, y_set.left[g][y]), (x_set.right[x][g], y))
    representatives, class_of = _quotient_classes(forest, pairs)

    g1, g3 = x_set.left_group, y_set.right_group
    left = tuple(
        tuple(class_of[(x_set.left[g][x], y)] for x, y in representatives)
        for g in g1.elements()
    )
    right = tuple(
        tuple(class_of[(x, y_set.right[y][g])] for g in g3.elements())
        for x, y in representatives
    )
    labels = tuple(f"{x_set.labels[x]}{y_set.labels[y]}" for x, y in representatives)
    product = Biset(g1, g3, left, right, labels)
    logger.debug(f"Biset product {x_set.size} x {y_set.size} over {middle.name} has {product.size} classes")
    return BisetProduct(product, class_of, tuple(representatives))


def is_action_free(biset: Biset) -> Tuple[bool, bool]:
    """(left action free, right action free)."""
    left_free = all(
        biset.left[g][x] != x
        for g in biset.left_group.elements() if g != 0
        for x in range(biset.size)
    )
    right_free = all(
        biset.right[x][g] != x
        for g in biset.right_group.elements() if g != 0
        for x in range(biset.size)
    )
    return left_free, right_free


def orbits(biset: Biset, side: str) -> List[List[int]]:
    """Orbits of the left or right action, each sorted, ordered by minimum."""
    if side not in ("left", "right"):
        raise BisetError(f"side must be 'left' or 'right', got {side!r}")
    seen = set()
    out = []
    for x in range(biset.size):
        if x in seen:
            continue
        if side == "left":
            orbit = sorted({biset.left[g][x] for g in biset.left_group.elements()})
        else:
            orbit = sorted({biset.right[x][g] for g in biset.right_group.elements()})
        seen.update(orbit)
        out.append(orbit)
    return out


def orbit_reps(biset: Biset, side: str, rng: Optional[random.Random] = None) -> List[int]:
    """
    One representative per orbit of the chosen action.

    Representatives are the minimal index of each orbit; when ``rng`` is given
    a random member of each orbit is drawn instead.
    """
    reps = []
    for orbit in orbits(biset, side):
        reps.append(rng.choice(orbit) if rng is not None else orbit[0])
    return reps


def biset_from_embeddings(left_emb: GroupHom, right_emb: GroupHom) -> Biset:
    """
    H1 x_G H2 for embeddings G -> H1 and G -> H2.

    Pairs (h1, h2) are identified by (h1 g, h2) ~ (h1, g h2), g acting through
    the embeddings. Labels read "(h1,h2)" on class representatives.

    Raises:
        GroupError: an embedding is not injective or the sources differ
    """
    if left_emb.source != right_emb.source:
        raise GroupError("embeddings must share their source group")
    if not (left_emb.is_injective() and right_emb.is_injective()):
        raise GroupError("embeddings must be injective")

    h1, h2, g = left_emb.target, right_emb.target, left_emb.source
    pairs = [(a, b) for a in h1.elements() for b in h2.elements()]
    forest: DisjointSet[Pair] = DisjointSet()
    for a, b in pairs:
        for k in g.elements():
            forest.union((h1.mul(a, left_emb(k)), b), (a, h2.mul(right_emb(k), b)))
    representatives, class_of = _quotient_classes(forest, pairs)

    left = tuple(
        tuple(class_of[(h1.mul(h, a), b)] for a, b in representatives)
        for h in h1.elements()
    )
    right = tuple(
        tuple(class_of[(a, h2.mul(b, h))] for h in h2.elements())
        for a, b in representatives
    )
    labels = tuple(f"({h1.label(a)},{h2.label(b)})" for a, b in representatives)
    return make_biset(h1, h2, left, right, labels)
