"""
Graded quotients Λ/(relations) computed degree by degree.

The ambient Λ has a basis of monomials (category morphisms or nonzero paths)
whose products are again a monomial or zero, with arrow weights 0 or 1. Under
those conditions Λ_a = Λ_1 Λ_{a-1} for a >= 1, so the ideal in degree d is

    I_d = Λ_1 I_{d-1} + sum over relations g of Λ_0 g Λ_{d - deg g}

and each degree needs only the previous one. Every (e_i, e_j)-block is
handled by its own echelon basis and is skipped once it is full.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union

from src.config import settings
from src.errors import AlgebraError, InfiniteGradedPieceError
from src.quivers.category import EICategory
from src.quivers.ei_quiver import EIQuiver
from src.quivers.quiver import Path, Quiver
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import EchelonBasis
from src.utils.logger import get_logger

logger = get_logger(__name__)

Key = Hashable
Block = Tuple[int, int]
Element = Dict[Key, object]


class MonomialAmbient(ABC):
    """A graded algebra with a monomial basis; the product of monomials is a monomial or 0."""

    field: FieldDescriptor
    n_vertices: int
    max_degree: int

    @abstractmethod
    def basis(self, d: int) -> List[Key]:
        """Monomials of degree d in a fixed order."""

    @abstractmethod
    def multiply(self, u: Key, v: Key) -> Optional[Key]:
        """u * v, or None when the product is zero."""

    @abstractmethod
    def block(self, key: Key) -> Block:
        """(target vertex, source vertex)."""

    @abstractmethod
    def degree(self, key: Key) -> int:
        pass

    @abstractmethod
    def label(self, key: Key) -> str:
        pass

    @abstractmethod
    def sort_key(self, key: Key) -> Tuple:
        pass

    def format(self, element: Element) -> str:
        """Render a linear combination of monomials in basis order, e.g. "aa* - a*a"."""
        field_ = self.field
        minus_one = field_.neg(field_.one)
        terms = []
        for key in sorted(element, key=self.sort_key):
            c = element[key]
            if c == field_.zero:
                continue
            if c == field_.one:
                terms.append(("+", self.label(key)))
            elif c == minus_one:
                terms.append(("-", self.label(key)))
            else:
                terms.append(("+", f"{field_.format(c)}·{self.label(key)}"))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class CategoryAmbient(MonomialAmbient):
    """
    KC(Q-bar, X-bar) graded by star-degree and truncated at ``max_degree``.

    A morphism of star-degree d has length at most d + (d + 1) L, with L the
    longest path of Q, so that length cap keeps every monomial of degree <= d.
    """

    def __init__(self, double: EIQuiver, field_: FieldDescriptor, max_degree: int):
        if not double.is_double:
            raise AlgebraError("the category ambient needs a double EI quiver")
        original = Quiver(double.quiver.n_vertices, double.quiver.arrows[: double.n_original])
        longest = original.longest_path_length()
        cap = max_degree + (max_degree + 1) * longest
        self.double = double
        self.field = field_
        self.n_vertices = double.quiver.n_vertices
        self.max_degree = max_degree
        self.category = EICategory(double, max_length=cap, weights=double.star_weights(), max_weight=max_degree)
        self._by_degree: Dict[int, List[int]] = {}
        for m in range(len(self.category)):
            self._by_degree.setdefault(self.category.weight(m), []).append(m)

    def basis(self, d: int) -> List[Key]:
        return self._by_degree.get(d, [])

    def multiply(self, u: Key, v: Key) -> Optional[Key]:
        return self.category.compose(u, v)

    def block(self, key: Key) -> Block:
        m = self.category.morphisms[key]
        return m.target, m.source

    def degree(self, key: Key) -> int:
        return self.category.weight(key)

    def label(self, key: Key) -> str:
        return self.category.label(key)

    def sort_key(self, key: Key) -> Tuple:
        return (key,)


class PathAmbient(MonomialAmbient):
    """
    The path algebra KQ modulo monomial relations, with 0/1 arrow weights.

    Monomial relations become forbidden subwords so that nonzero paths stay a
    basis.

    Raises:
        AlgebraError: a weight is not 0 or 1
        InfiniteGradedPieceError: a graded piece has paths longer than EIPRE_MAX_PATH_LENGTH
    """

    def __init__(
        self,
        quiver: Quiver,
        field_: FieldDescriptor,
        weights: Sequence[int],
        forbidden: Sequence[Tuple[int, ...]],
        max_degree: int,
    ):
        if len(weights) != quiver.n_arrows or any(w not in (0, 1) for w in weights):
            raise AlgebraError("path ambients need one weight in {0, 1} per arrow")
        self.quiver = quiver
        self.field = field_
        self.n_vertices = quiver.n_vertices
        self.weights = list(weights)
        self.forbidden = [tuple(word) for word in forbidden]
        self.max_degree = max_degree
        self._by_degree: Dict[int, List[Path]] = {}
        self._enumerate()

    def is_zero_word(self, arrows: Tuple[int, ...]) -> bool:
        n = len(arrows)
        for word in self.forbidden:
            k = len(word)
            for start in range(n - k + 1):
                if arrows[start : start + k] == word:
                    return True
        return False

    def _enumerate(self) -> None:
        quiver = self.quiver
        cap = settings.engine.max_path_length
        layer = [quiver.trivial_path(i) for i in quiver.vertices()]
        length = 0
        while layer:
            for p in layer:
                self._by_degree.setdefault(quiver.path_weight(p, self.weights), []).append(p)
            length += 1
            extended = []
            for p in layer:
                weight = quiver.path_weight(p, self.weights)
                for a in quiver.arrows_from(p.target):
                    if weight + self.weights[a] > self.max_degree:
                        continue
                    arrows = (a,) + p.arrows
                    if not self.is_zero_word(arrows):
                        extended.append(Path(arrows, p.source, quiver.target(a)))
            if extended and length > cap:
                raise InfiniteGradedPieceError(
                    f"graded pieces up to degree {self.max_degree} contain paths longer than {cap}"
                )
            layer = sorted(extended)
        for paths in self._by_degree.values():
            paths.sort(key=Path.sort_key)

    def basis(self, d: int) -> List[Key]:
        return self._by_degree.get(d, [])

    def multiply(self, u: Key, v: Key) -> Optional[Key]:
        if u.source != v.target:
            return None
        if u.is_trivial:
            return v
        if v.is_trivial:
            return u
        arrows = u.arrows + v.arrows
        if self.is_zero_word(arrows) or self.quiver.path_weight(Path(arrows, v.source, u.target), self.weights) > self.max_degree:
            return None
        return Path(arrows, v.source, u.target)

    def block(self, key: Key) -> Block:
        return key.target, key.source

    def degree(self, key: Key) -> int:
        return self.quiver.path_weight(key, self.weights)

    def label(self, key: Key) -> str:
        return self.quiver.path_name(key)

    def sort_key(self, key: Key) -> Tuple:
        return key.sort_key()


@dataclass
class GradedAlgebraPresentation:
    """A monomial ambient and homogeneous relations, sparse over monomials."""

    ambient: MonomialAmbient
    relations: List[Element]
    name: str = "Λ/I"
    relation_labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.relations = [r for r in (_clean(self.ambient.field, r) for r in self.relations) if r]
        for relation in self.relations:
            degrees = {self.ambient.degree(key) for key in relation}
            if len(degrees) > 1:
                raise AlgebraError(f"relation {self.ambient.format(relation)} is not homogeneous")

    def relation_degree(self, relation: Element) -> int:
        return self.ambient.degree(next(iter(relation)))

    def block_components(self) -> List[Tuple[Block, int, Element]]:
        """e_i g e_j for every relation g; they generate the same ideal."""
        out = []
        for relation in self.relations:
            parts: Dict[Block, Element] = {}
            for key, c in relation.items():
                parts.setdefault(self.ambient.block(key), {})[key] = c
            for block in sorted(parts):
                out.append((block, self.relation_degree(relation), parts[block]))
        return out


def _clean(field_: FieldDescriptor, element: Element) -> Element:
    return {k: c for k, c in element.items() if c != field_.zero}


@dataclass
class GradedQuotient:
    """
    Degreewise dimensions of a graded quotient.

    ``block_dims[d][i][j]`` is dim e_i (Λ/I)_d e_j; ``bases[d]`` holds the
    monomials whose classes form a basis of degree d.
    """

    dims: List[int]
    block_dims: List[List[List[int]]]
    bases: List[List[Key]]
    stabilized_at: Optional[int]

    @property
    def stabilized(self) -> bool:
        return self.stabilized_at is not None

    @property
    def total(self) -> Optional[int]:
        return sum(self.dims) if self.stabilized else None

    def to_dict(self) -> Dict:
        return {
            "dims": self.dims,
            "block_dims": self.block_dims,
            "stabilized_at": self.stabilized_at,
            "total": self.total,
        }


def graded_quotient_dims(presentation: GradedAlgebraPresentation, maxdeg: Optional[int] = None) -> GradedQuotient:
    """
    Dimensions of (Λ/I)_d for d <= maxdeg.

    Args:
        presentation: Ambient and homogeneous relations
        maxdeg: Highest degree; defaults to the ambient's truncation degree

    Returns:
        GradedQuotient; scanning stops at the first zero degree

    Raises:
        AlgebraError: maxdeg exceeds the degrees the ambient was built for
    """
    ambient = presentation.ambient
    field_ = ambient.field
    maxdeg = ambient.max_degree if maxdeg is None else maxdeg
    if maxdeg > ambient.max_degree:
        raise AlgebraError(f"ambient only holds degrees <= {ambient.max_degree}, asked for {maxdeg}")

    components = presentation.block_components()
    n = ambient.n_vertices
    degree_zero = ambient.basis(0)

    def split(keys: List[Key]) -> Tuple[Dict[Block, List[Key]], Dict[Key, int]]:
        blocks: Dict[Block, List[Key]] = {}
        position: Dict[Key, int] = {}
        for key in keys:
            members = blocks.setdefault(ambient.block(key), [])
            position[key] = len(members)
            members.append(key)
        return blocks, position

    dims: List[int] = []
    block_dims: List[List[List[int]]] = []
    bases: List[List[Key]] = []
    stabilized_at: Optional[int] = None
    previous: Dict[Block, EchelonBasis] = {}
    previous_blocks: Dict[Block, List[Key]] = {}

    for d in range(maxdeg + 1):
        blocks, position = split(ambient.basis(d))
        ideal = {block: EchelonBasis(field_, len(keys)) for block, keys in blocks.items()}

        def add(block: Block, vector: Dict[int, object]) -> None:
            echelon = ideal.get(block)
            if echelon is not None and not echelon.is_full:
                echelon.add(vector)

        if d >= 1:
            for (k, j), echelon in previous.items():
                keys = previous_blocks[(k, j)]
                for u in ambient.basis(1):
                    i, source = ambient.block(u)
                    if source != k or ideal.get((i, j)) is None or ideal[(i, j)].is_full:
                        continue
                    target = ideal[(i, j)]
                    for row in echelon.rows.values():
                        vector: Dict[int, object] = {}
                        for pos, c in row.items():
                            w = ambient.multiply(u, keys[pos])
                            if w is None:
                                continue
                            q = position[w]
                            vector[q] = field_.add(vector.get(q, field_.zero), c)
                        target.add(vector)

        for (i, j), degree, relation in components:
            if degree > d:
                continue
            for v in ambient.basis(d - degree):
                if ambient.block(v)[0] != j:
                    continue
                for u in degree_zero:
                    if ambient.block(u)[1] != i:
                        continue
                    block, vector = _sandwich(ambient, field_, position, u, relation, v)
                    if block is not None:
                        add(block, vector)

        matrix = [[0] * n for _ in range(n)]
        basis_d: List[Key] = []
        for block in sorted(blocks):
            echelon = ideal[block]
            complement = echelon.complement()
            matrix[block[0]][block[1]] = len(complement)
            basis_d.extend(blocks[block][c] for c in complement)
        dims.append(len(basis_d))
        block_dims.append(matrix)
        bases.append(basis_d)
        logger.debug(f"{presentation.name}: degree {d} has dimension {dims[-1]}")

        if dims[-1] == 0:
            stabilized_at = d
            break
        previous, previous_blocks = ideal, blocks

    return GradedQuotient(dims, block_dims, bases, stabilized_at)


def _sandwich(
    ambient: MonomialAmbient,
    field_: FieldDescriptor,
    position: Dict[Key, int],
    left: Key,
    element: Element,
    right: Key,
) -> Tuple[Optional[Block], Dict[int, object]]:
    """Positions of left * element * right in its degree block."""
    out: Dict[int, object] = {}
    block = None
    for key, c in element.items():
        middle = ambient.multiply(left, key)
        if middle is None:
            continue
        full = ambient.multiply(middle, right)
        if full is None:
            continue
        block = ambient.block(full)
        k = position[full]
        out[k] = field_.add(out.get(k, field_.zero), c)
    return block, out


def path_algebra_quotient(
    quiver: Quiver,
    relations: Sequence[Element],
    field_: FieldDescriptor,
    grading: Union[str, Sequence[int]] = "length",
    maxdeg: Optional[int] = None,
    star_arrows: Optional[Sequence[int]] = None,
    name: str = "KQ/I",
) -> GradedAlgebraPresentation:
    """
    KQ/(relations) as a graded presentation.

    Args:
        quiver: The quiver
        relations: Linear combinations of paths, as {Path: coefficient}
        field_: Coefficient field
        grading: "length", "star" (weight 1 on ``star_arrows``), "zero", or explicit weights
        maxdeg: Highest degree to build; defaults to EIPRE_DEFAULT_MAXDEG
        star_arrows: Arrow indices of degree one for the star grading

    Raises:
        AlgebraError: unknown grading, unknown arrow or inhomogeneous relation
    """
    maxdeg = settings.engine.default_maxdeg if maxdeg is None else maxdeg
    if grading == "length":
        weights = [1] * quiver.n_arrows
    elif grading == "zero":
        weights = [0] * quiver.n_arrows
    elif grading == "star":
        stars = set(star_arrows or [])
        weights = [1 if a in stars else 0 for a in range(quiver.n_arrows)]
    elif isinstance(grading, str):
        raise AlgebraError(f"unknown grading {grading!r}")
    else:
        weights = list(grading)

    cleaned = []
    for relation in relations:
        relation = _clean(field_, relation)
        for p in relation:
            if any(not 0 <= a < quiver.n_arrows for a in p.arrows):
                raise AlgebraError(f"relation uses an unknown arrow in {p}")
        cleaned.append(relation)

    forbidden = [next(iter(r)).arrows for r in cleaned if len(r) == 1 and next(iter(r)).arrows]
    ambient = PathAmbient(quiver, field_, weights, forbidden, maxdeg)
    remaining = []
    for relation in cleaned:
        if len(relation) == 1:
            continue
        for p in relation:
            if ambient.degree(p) != ambient.degree(next(iter(relation))):
                raise AlgebraError(f"relation {ambient.format(relation)} is not homogeneous")
        kept = {p: c for p, c in relation.items() if not ambient.is_zero_word(p.arrows)}
        remaining.append(kept)
    labels = [ambient.format(r) for r in cleaned]
    return GradedAlgebraPresentation(ambient, remaining, name=name, relation_labels=labels)
