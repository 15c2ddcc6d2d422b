"""
Finite-dimensional algebras with sparse structure constants.

Every algebra here has a complete set of orthogonal idempotents that are basis
elements, and every basis element b lies in one block e_t b e_s. Matrices of
the regular actions use the column convention: ``left_matrix(b)[k][j]`` is the
coefficient of basis k in b * basis_j, and right_matrix(b) R_b satisfies
R_b R_c = R_{cb}.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from src.config import settings
from src.errors import AlgebraError
from src.groups.groups import FiniteGroup
from src.quivers.category import EICategory
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import Matrix, SparseVector, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)

Products = Dict[Tuple[int, int], Dict[int, object]]


class Algebra:
    """
    An associative unital algebra given by structure constants.

    Args:
        field: Coefficient field
        labels: Basis labels
        products: (i, j) -> sparse product of basis i and basis j; missing means 0
        idempotents: Basis indices of the vertex idempotents e_1..e_n
        blocks: (left vertex, right vertex) of each basis element
        generators: Basis elements generating the algebra (default: all)
        name: Display name
    """

    def __init__(
        self,
        field: FieldDescriptor,
        labels: Sequence[str],
        products: Products,
        idempotents: Sequence[int],
        blocks: Sequence[Tuple[int, int]],
        generators: Optional[Sequence[int]] = None,
        name: str = "A",
    ):
        if len(blocks) != len(labels):
            raise AlgebraError("every basis element needs a block")
        self.field = field
        self.labels = list(labels)
        self.products = products
        self.idempotents = list(idempotents)
        self.blocks = [tuple(b) for b in blocks]
        self.generators = list(generators) if generators is not None else list(range(len(labels)))
        self.name = name
        self._left: Dict[int, Matrix] = {}
        self._right: Dict[int, Matrix] = {}
        self._opposite: Optional["Algebra"] = None
        self._radical: Optional[Matrix] = None
        self.category: Optional[EICategory] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.idempotents)

    def mul_basis(self, i: int, j: int) -> Dict[int, object]:
        return self.products.get((i, j), {})

    def multiply(self, u: SparseVector, v: SparseVector) -> SparseVector:
        field = self.field
        out: Dict[int, object] = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = field.mul(a, b)
                for k, c in self.mul_basis(i, j).items():
                    out[k] = field.add(out.get(k, field.zero), field.mul(ab, c))
        return {k: c for k, c in out.items() if c != field.zero}

    def unit(self) -> SparseVector:
        return {e: self.field.one for e in self.idempotents}

    def basis_with_source(self, source: int) -> List[int]:
        return [k for k, block in enumerate(self.blocks) if block[1] == source]

    def left_matrix(self, b: int) -> Matrix:
        if b not in self._left:
            out = zeros(self.field, self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.mul_basis(b, j).items():
                    out[k][j] = c
            self._left[b] = out
        return self._left[b]

    def right_matrix(self, b: int) -> Matrix:
        if b not in self._right:
            out = zeros(self.field, self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.mul_basis(j, b).items():
                    out[k][j] = c
            self._right[b] = out
        return self._right[b]

    def opposite(self) -> "Algebra":
        """A^op on the same basis; the opposite of A^op is A itself."""
        if self._opposite is None:
            products = {(j, i): c for (i, j), c in self.products.items()}
            op = Algebra(
                self.field,
                self.labels,
                products,
                self.idempotents,
                [(s, t) for t, s in self.blocks],
                self.generators,
                name=f"{self.name}^op",
            )
            op.category = self.category
            op._opposite = self
            self._opposite = op
        return self._opposite

    def check_idempotents(self) -> Tuple[bool, Optional[str]]:
        field = self.field
        for a in self.idempotents:
            for b in self.idempotents:
                expected = {a: field.one} if a == b else {}
                if self.mul_basis(a, b) != expected:
                    return False, f"idempotents {self.labels[a]}, {self.labels[b]} are not orthogonal"
        unit = self.unit()
        for k in range(self.dim):
            basis = {k: field.one}
            if self.multiply(unit, basis) != basis or self.multiply(basis, unit) != basis:
                return False, f"sum of idempotents does not act as 1 on {self.labels[k]}"
        return True, None

    def check_associativity(self, limit: Optional[int] = None) -> Tuple[bool, Optional[str]]:
        """Exhaustive on basis triples up to ``limit``, on generator triples above."""
        limit = settings.engine.associativity_check_limit if limit is None else limit
        basis = range(self.dim) if self.dim <= limit else self.generators
        for i in basis:
            for j in basis:
                ij = self.mul_basis(i, j)
                for k in basis:
                    left = self.multiply(ij, {k: self.field.one})
                    right = self.multiply({i: self.field.one}, self.mul_basis(j, k))
                    if left != right:
                        return False, f"not associative at ({self.labels[i]},{self.labels[j]},{self.labels[k]})"
        return True, None

    def __repr__(self) -> str:
        return f"Algebra({self.name}, dim={self.dim}, vertices={self.n_vertices})"


def group_algebra(group: FiniteGroup, field: FieldDescriptor) -> Algebra:
    """The group algebra KG with basis the group elements."""
    products = {(a, b): {group.mul(a, b): field.one} for a in group.elements() for b in group.elements()}
    return Algebra(
        field,
        group.labels,
        products,
        [0],
        [(0, 0)] * group.order,
        name=f"K{group.name}",
    )


def field_algebra(field: FieldDescriptor) -> Algebra:
    """The ground field as a one-vertex algebra."""
    return Algebra(field, ["1"], {(0, 0): {0: field.one}}, [0], [(0, 0)], name=field.label())


def category_algebra(category: EICategory, field: FieldDescriptor) -> Algebra:
    """
    KC: basis the morphisms, product the composite or zero.

    Generators are the morphisms over paths of length at most one.
    """
    products: Products = {}
    n = len(category)
    for f in range(n):
        for g in range(n):
            fg = category.compose(f, g)
            if fg is not None:
                products[(f, g)] = {fg: field.one}
    morphisms = category.morphisms
    algebra = Algebra(
        field,
        [category.label(m) for m in range(n)],
        products,
        [category.identity(x) for x in range(category.n_objects)],
        [(m.target, m.source) for m in morphisms],
        generators=[k for k, m in enumerate(morphisms) if m.path.length <= 1],
        name="KC",
    )
    algebra.category = category
    logger.debug(f"Category algebra of dimension {algebra.dim}")
    return algebra


def vertex_group_algebra(category: EICategory, field: FieldDescriptor) -> Tuple[Algebra, List[int]]:
    """
    A = product of the KX(i), with the inclusion of its basis into KC.

    Returns:
        (A, list mapping each basis element of A to its morphism index in C)
    """
    inclusion = [k for k, m in enumerate(category.morphisms) if m.path.is_trivial]
    position = {k: a for a, k in enumerate(inclusion)}
    products: Products = {}
    for a, f in enumerate(inclusion):
        for b, g in enumerate(inclusion):
            fg = category.compose(f, g)
            if fg is not None:
                products[(a, b)] = {position[fg]: field.one}
    morphisms = category.morphisms
    algebra = Algebra(
        field,
        [category.label(k) for k in inclusion],
        products,
        [position[category.identity(x)] for x in range(category.n_objects)],
        [(morphisms[k].target, morphisms[k].source) for k in inclusion],
        name="A",
    )
    return algebra, inclusion
