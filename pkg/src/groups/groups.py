"""
Finite groups as Cayley tables and homomorphisms between them.

Elements are indices 0..order-1 and index 0 is always the identity.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from src.errors import GroupError
from src.utils.logger import get_logger
from src.utils.validators import validate_group_table, validate_positive

logger = get_logger(__name__)


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group given by its multiplication table.

    ``table[a][b]`` is the index of a*b; ``labels`` are display names.
    """

    table: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    name: str = "G"
    inverses: Tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        inverses = tuple(row.index(0) for row in self.table)
        object.__setattr__(self, "inverses", inverses)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def is_trivial(self) -> bool:
        return self.order == 1

    def label(self, a: int) -> str:
        return self.labels[a]

    def check_axioms(self) -> Tuple[bool, Optional[str]]:
        return validate_group_table(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def group_from_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None, name: str = "G") -> FiniteGroup:
    """
    Build a group from a Cayley table, checking the group axioms.

    Raises:
        GroupError: table is not a group table with identity at index 0
    """
    ok, error = validate_group_table(table)
    if not ok:
        raise GroupError(error)
    order = len(table)
    if labels is None:
        labels = ["1"] + [f"g{a}" for a in range(1, order)]
    if len(labels) != order:
        raise GroupError(f"expected {order} labels, got {len(labels)}")
    logger.debug(f"Group {name} of order {order} accepted")
    return FiniteGroup(tuple(tuple(row) for row in table), tuple(labels), name=name)


def cyclic_group(n: int, generator: str = "η") -> FiniteGroup:
    """
    The cyclic group of order n; index k is generator^k.

    Raises:
        GroupError: n <= 0
    """
    ok, error = validate_positive(n, "group order")
    if not ok:
        raise GroupError(error)
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    labels = tuple("1" if k == 0 else generator if k == 1 else f"{generator}^{k}" for k in range(n))
    return FiniteGroup(table, labels, name=f"C{n}")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


@dataclass(frozen=True)
class GroupHom:
    """A map of groups given by the image of each source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_homomorphism(self) -> bool:
        if len(self.images) != self.source.order or self.images[0] != 0:
            return False
        return all(
            self.images[self.source.mul(a, b)] == self.target.mul(self.images[a], self.images[b])
            for a in self.source.elements()
            for b in self.source.elements()
        )

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)


def make_hom(source: FiniteGroup, target: FiniteGroup, images: Sequence[int]) -> GroupHom:
    hom = GroupHom(source, target, tuple(images))
    if not hom.is_homomorphism():
        raise GroupError(f"images {list(images)} do not define a homomorphism {source.name} -> {target.name}")
    return hom


def cyclic_embedding(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    """
    The embedding C_m -> C_n sending the generator to generator^(n/m).

    Raises:
        GroupError: m does not divide n
    """
    m, n = source.order, target.order
    if n % m != 0:
        raise GroupError(f"C{m} does not embed in C{n}")
    step = n // m
    return make_hom(source, target, [(k * step) % n for k in range(m)])

