"""
Bimodules and tensor products over an algebra.

A (A, B)-bimodule stores left action matrices for A and right action matrices
for B, both in the column convention; right matrices compose as
R_b R_c = R_{cb}. Tensor products M (x)_B N are the plain tensor product modulo
the span of m b (x) n - m (x) b n over generators b, and their basis is the
set of pure tensors left outside the echelon pivots.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.algebra import Algebra
from src.algebra.modules import (
    LeftModule,
    _closure,
    _quotient_action,
    projection_matrix,
    solve_intertwiners,
)
from src.errors import AlgebraError, ModuleError
from src.groups.bisets import Biset
from src.scalars.linalg import EchelonBasis, Matrix, SparseVector, Vector, mat_add, mat_mul, mat_scale, mat_vec, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)

Block = Tuple[int, int]


class Bimodule:
    """
    A finite-dimensional (left_algebra, right_algebra)-bimodule.

    Args:
        left_algebra: Algebra acting on the left
        right_algebra: Algebra acting on the right
        dim: Dimension over the field
        left_actions: One matrix per basis element of left_algebra
        right_actions: One matrix per basis element of right_algebra
        name: Display name
        labels: Optional basis labels
    """

    def __init__(
        self,
        left_algebra: Algebra,
        right_algebra: Algebra,
        dim: int,
        left_actions: Sequence[Matrix],
        right_actions: Sequence[Matrix],
        name: str = "B",
        labels: Optional[Sequence[str]] = None,
    ):
        if len(left_actions) != left_algebra.dim or len(right_actions) != right_algebra.dim:
            raise ModuleError(f"{name}: one action matrix per algebra basis element is required")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.field = left_algebra.field
        self.dim = dim
        self.left_actions = list(left_actions)
        self.right_actions = list(right_actions)
        self.name = name
        self.labels = list(labels) if labels is not None else None

    @cached_property
    def blocks(self) -> List[Block]:
        """(i, j) with e_i v e_j = v for every basis vector v."""
        left = _vertices(self.field, self.dim, [self.left_actions[e] for e in self.left_algebra.idempotents])
        right = _vertices(self.field, self.dim, [self.right_actions[e] for e in self.right_algebra.idempotents])
        if any(v < 0 for v in left + right):
            raise ModuleError(f"basis of {self.name} is not adapted to the idempotents")
        return list(zip(left, right))

    def block_dims(self) -> List[List[int]]:
        """``out[i][j]`` = dim e_i M e_j."""
        out = [[0] * self.right_algebra.n_vertices for _ in range(self.left_algebra.n_vertices)]
        for i, j in self.blocks:
            out[i][j] += 1
        return out

    def left_generators(self) -> List[int]:
        return sorted(set(self.left_algebra.generators) | set(self.left_algebra.idempotents))

    def right_generators(self) -> List[int]:
        return sorted(set(self.right_algebra.generators) | set(self.right_algebra.idempotents))

    def operators(self) -> List[Matrix]:
        return [self.left_actions[a] for a in self.left_generators()] + [
            self.right_actions[b] for b in self.right_generators()
        ]

    def left_module(self) -> LeftModule:
        return LeftModule(self.left_algebra, self.dim, self.left_actions, name=self.name)

    def right_module(self) -> LeftModule:
        """The right structure as a left module over the opposite algebra."""
        return LeftModule(self.right_algebra.opposite(), self.dim, self.right_actions, name=f"{self.name}_op")

    def act_left(self, a: int, v: Vector) -> Vector:
        return mat_vec(self.field, self.left_actions[a], v)

    def act_right(self, v: Vector, b: int) -> Vector:
        return mat_vec(self.field, self.right_actions[b], v)

    def check_axioms(self) -> Tuple[bool, Optional[str]]:
        """Both structures are modules and the two actions commute on generators."""
        ok, error = self.left_module().check_axioms()
        if not ok:
            return False, error
        ok, error = self.right_module().check_axioms()
        if not ok:
            return False, error
        if self.dim == 0:
            return True, None
        field = self.field
        for a in self.left_generators():
            for b in self.right_generators():
                ab = mat_mul(field, self.left_actions[a], self.right_actions[b])
                ba = mat_mul(field, self.right_actions[b], self.left_actions[a])
                if ab != ba:
                    return False, f"left and right actions of {self.name} do not commute"
        return True, None

    def __repr__(self) -> str:
        return f"Bimodule({self.name}, dim={self.dim}, {self.left_algebra.name}-{self.right_algebra.name})"


def _vertices(field, dim: int, idempotent_actions: Sequence[Matrix]) -> List[int]:
    out = [-1] * dim
    for i, matrix in enumerate(idempotent_actions):
        for k in range(dim):
            if matrix[k][k] == field.one and all(matrix[r][k] == field.zero for r in range(dim) if r != k):
                out[k] = i
    return out


def _combine(field, actions: Sequence[Matrix], element: SparseVector, dim: int) -> Matrix:
    out = zeros(field, dim, dim)
    for b, c in element.items():
        out = mat_add(field, out, mat_scale(field, c, actions[b]))
    return out


def regular_bimodule(algebra: Algebra) -> Bimodule:
    n = algebra.dim
    return Bimodule(
        algebra,
        algebra,
        n,
        [algebra.left_matrix(b) for b in range(n)],
        [algebra.right_matrix(b) for b in range(n)],
        name=algebra.name,
        labels=algebra.labels,
    )


def restrict_bimodule(
    bimodule: Bimodule,
    left: Optional[Tuple[Algebra, Sequence[SparseVector]]] = None,
    right: Optional[Tuple[Algebra, Sequence[SparseVector]]] = None,
    name: Optional[str] = None,
) -> Bimodule:
    """
    Restrict scalars along algebra maps given by the image of every basis element.

    Args:
        bimodule: The bimodule to restrict
        left: (new left algebra, images of its basis in the old left algebra)
        right: (new right algebra, images of its basis in the old right algebra)
    """
    field, dim = bimodule.field, bimodule.dim
    left_algebra, left_actions = bimodule.left_algebra, bimodule.left_actions
    right_algebra, right_actions = bimodule.right_algebra, bimodule.right_actions
    if left is not None:
        left_algebra = left[0]
        left_actions = [_combine(field, bimodule.left_actions, image, dim) for image in left[1]]
    if right is not None:
        right_algebra = right[0]
        right_actions = [_combine(field, bimodule.right_actions, image, dim) for image in right[1]]
    return Bimodule(
        left_algebra,
        right_algebra,
        dim,
        left_actions,
        right_actions,
        name=name or bimodule.name,
        labels=bimodule.labels,
    )


def biset_bimodule(biset: Biset, left_algebra: Algebra, right_algebra: Algebra) -> Bimodule:
    """
    KX for a (G1, G2)-biset X over the group algebras KG1 and KG2.

    Raises:
        AlgebraError: the algebras are not the group algebras of the biset groups
    """
    if left_algebra.dim != biset.left_group.order or right_algebra.dim != biset.right_group.order:
        raise AlgebraError("biset groups do not match the algebras")
    field = left_algebra.field
    n = biset.size
    left = []
    for g in biset.left_group.elements():
        matrix = zeros(field, n, n)
        for x in range(n):
            matrix[biset.act_left(g, x)][x] = field.one
        left.append(matrix)
    right = []
    for g in biset.right_group.elements():
        matrix = zeros(field, n, n)
        for x in range(n):
            matrix[biset.act_right(x, g)][x] = field.one
        right.append(matrix)
    return Bimodule(left_algebra, right_algebra, n, left, right, name="KX", labels=biset.labels)


def bimodule_hom_space(source: Bimodule, target: Bimodule) -> List[Matrix]:
    """Basis of the bimodule maps source -> target."""
    if source.left_algebra is not target.left_algebra or source.right_algebra is not target.right_algebra:
        raise ModuleError("bimodules over different algebras")
    if source.dim == 0 or target.dim == 0:
        return []
    pairs = [(source.left_actions[a], target.left_actions[a]) for a in source.left_generators()]
    pairs += [(source.right_actions[b], target.right_actions[b]) for b in source.right_generators()]
    return solve_intertwiners(source.field, source.blocks, target.blocks, pairs)


def quotient_bimodule(bimodule: Bimodule, vectors: Sequence[Vector], name: str = "Q") -> Tuple[Bimodule, Matrix]:
    """
    bimodule / (sub-bimodule generated by ``vectors``).

    Returns:
        (quotient, projection matrix)
    """
    field = bimodule.field
    echelon = _closure(field, bimodule.dim, bimodule.operators(), vectors)
    complement = echelon.complement()
    left = [_quotient_action(field, echelon, complement, a) for a in bimodule.left_actions]
    right = [_quotient_action(field, echelon, complement, b) for b in bimodule.right_actions]
    labels = [bimodule.labels[c] for c in complement] if bimodule.labels else None
    quotient = Bimodule(bimodule.left_algebra, bimodule.right_algebra, len(complement), left, right, name, labels)
    logger.debug(f"{name}: quotient of dimension {quotient.dim} (relations span {echelon.rank})")
    return quotient, projection_matrix(field, echelon, complement)


@dataclass
class TensorProduct:
    """
    M (x)_B N with the data needed to write tensors in its basis.

    ``pairs[k]`` is the pure tensor (m, n) of standard basis vectors that is
    basis vector k of ``bimodule``.
    """

    left: Bimodule
    right: Bimodule
    bimodule: Bimodule
    echelon: EchelonBasis
    complement: List[int]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        n = self.right.dim
        return [divmod(c, n) for c in self.complement]

    def plain_index(self, m: int, n: int) -> int:
        return m * self.right.dim + n

    def project(self, plain: SparseVector) -> Vector:
        return self.echelon.quotient_coordinates(plain, self.complement)

    def tensor(self, u: Vector, v: Vector) -> Vector:
        """Coordinates of u (x) v."""
        field = self.left.field
        plain: Dict[int, object] = {}
        for m, x in enumerate(u):
            if x == field.zero:
                continue
            for n, y in enumerate(v):
                if y == field.zero:
                    continue
                k = self.plain_index(m, n)
                plain[k] = field.add(plain.get(k, field.zero), field.mul(x, y))
        return self.project(plain)

    def pure(self, m: int, n: int) -> Vector:
        return self.project({self.plain_index(m, n): self.left.field.one})


def tensor_over_algebra(left: Bimodule, right: Bimodule, name: Optional[str] = None) -> TensorProduct:
    """
    M (x)_B N for an (A, B)-bimodule M and a (B, C)-bimodule N.

    Pairs (m, n) whose middle vertices differ vanish, so only matching pairs
    and relations within one middle block are generated.

    Raises:
        ModuleError: the middle algebras differ
    """
    if left.right_algebra is not right.left_algebra:
        raise ModuleError(f"cannot tensor {left.name} and {right.name}: middle algebras differ")
    field = left.field
    middle = left.right_algebra
    dim_m, dim_n = left.dim, right.dim
    plain_dim = dim_m * dim_n
    echelon = EchelonBasis(field, plain_dim)
    if plain_dim == 0:
        return _tensor_result(left, right, echelon, [], name)

    left_blocks, right_blocks = left.blocks, right.blocks
    for m in range(dim_m):
        for n in range(dim_n):
            if left_blocks[m][1] != right_blocks[n][0]:
                echelon.add({m * dim_n + n: field.one})

    by_right = {}
    for m in range(dim_m):
        by_right.setdefault(left_blocks[m][1], []).append(m)
    by_left = {}
    for n in range(dim_n):
        by_left.setdefault(right_blocks[n][0], []).append(n)

    for b in sorted(set(middle.generators) | set(middle.idempotents)):
        p, q = middle.blocks[b]
        r_matrix = left.right_actions[b]
        l_matrix = right.left_actions[b]
        for m in by_right.get(p, []):
            mb = [(k, r_matrix[k][m]) for k in range(dim_m) if r_matrix[k][m] != field.zero]
            for n in by_left.get(q, []):
                relation: Dict[int, object] = {}
                for k, x in mb:
                    idx = k * dim_n + n
                    relation[idx] = field.add(relation.get(idx, field.zero), x)
                for j in range(dim_n):
                    y = l_matrix[j][n]
                    if y != field.zero:
                        idx = m * dim_n + j
                        relation[idx] = field.sub(relation.get(idx, field.zero), y)
                echelon.add(relation)

    complement = echelon.complement()
    return _tensor_result(left, right, echelon, complement, name)


def _tensor_result(
    left: Bimodule, right: Bimodule, echelon: EchelonBasis, complement: List[int], name: Optional[str]
) -> TensorProduct:
    field = left.field
    dim_n = right.dim
    size = len(complement)

    def induced(transform) -> Matrix:
        out = zeros(field, size, size)
        for k, c in enumerate(complement):
            m, n = divmod(c, dim_n)
            coords = echelon.quotient_coordinates(transform(m, n), complement)
            for r in range(size):
                out[r][k] = coords[r]
        return out

    def left_image(matrix: Matrix):
        return lambda m, n: {
            k * dim_n + n: matrix[k][m] for k in range(left.dim) if matrix[k][m] != field.zero
        }

    def right_image(matrix: Matrix):
        return lambda m, n: {
            m * dim_n + j: matrix[j][n] for j in range(dim_n) if matrix[j][n] != field.zero
        }

    left_actions = [induced(left_image(a)) for a in left.left_actions]
    right_actions = [induced(right_image(b)) for b in right.right_actions]
    labels = None
    if left.labels and right.labels:
        labels = [f"{left.labels[c // dim_n]}⊗{right.labels[c % dim_n]}" for c in complement]
    bimodule = Bimodule(
        left.left_algebra,
        right.right_algebra,
        size,
        left_actions,
        right_actions,
        name=name or f"{left.name}⊗{right.name}",
        labels=labels,
    )
    return TensorProduct(left, right, bimodule, echelon, complement)


def tensor_power(bimodule: Bimodule, n: int) -> List[Bimodule]:
    """[M, M (x) M, ..., M^(x)n]; empty for n = 0."""
    if n < 0:
        raise AlgebraError(f"tensor power must be nonnegative, got {n}")
    if n == 0:
        return []
    powers = [bimodule]
    for k in range(2, n + 1):
        product = tensor_over_algebra(powers[-1], bimodule, name=f"{bimodule.name}^{k}")
        powers.append(product.bimodule)
        logger.debug(f"dim {bimodule.name}^(x){k} = {product.bimodule.dim}")
        if product.bimodule.dim == 0:
            break
    while len(powers) < n:
        powers.append(powers[-1])
    return powers


def tensor_power_dims(bimodule: Bimodule, n: int) -> List[int]:
    """Dimensions of M^(x)0 = A, M, ..., M^(x)n."""
    return [bimodule.left_algebra.dim] + [power.dim for power in tensor_power(bimodule, n)]
