"""
Hom and tensor functors producing modules.

A space of linear maps is held as a ``MapSpace`` (row-major flattened
matrices in RREF). When an algebra acts on such a space the resulting module
is re-expressed in a basis adapted to the vertex idempotents, so that every
downstream construction (kernels, covers, tensor products) can read off the
vertex of each basis vector.
"""

from dataclasses import dataclass
from typing import Callable, List, Sequence

from src.algebra.algebra import Algebra, field_algebra
from src.algebra.bimodule import Bimodule, TensorProduct, tensor_over_algebra
from src.algebra.modules import (
    LeftModule,
    adapt_module,
    compose,
    dual_map,
    dual_module,
    hom_space,
    regular_module,
)
from src.errors import ModuleError
from src.homology.covers import is_projective
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import Matrix, Subspace, Vector, identity, mat_vec, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)

MapAction = Callable[[int, Matrix], Matrix]


class MapSpace:
    """
    A subspace of the n_rows x n_cols matrices.

    Args:
        field: Coefficient field
        maps: Spanning matrices
        n_rows: Row count of every map
        n_cols: Column count of every map
    """

    def __init__(self, field: FieldDescriptor, maps: Sequence[Matrix], n_rows: int, n_cols: int):
        self.field = field
        self.n_rows = n_rows
        self.n_cols = n_cols
        self._space = Subspace(field, [self.flatten(m) for m in maps], n_rows * n_cols)

    @property
    def dimension(self) -> int:
        return self._space.dimension

    def flatten(self, matrix: Matrix) -> Vector:
        return [x for row in matrix for x in row]

    def unflatten(self, v: Vector) -> Matrix:
        if self.n_cols == 0:
            return [[] for _ in range(self.n_rows)]
        return [list(v[r * self.n_cols:(r + 1) * self.n_cols]) for r in range(self.n_rows)]

    def element(self, coords: Sequence) -> Matrix:
        return self.unflatten(self._space.element(coords))

    def basis(self) -> List[Matrix]:
        return [self.unflatten(v) for v in self._space.basis]

    def coordinates(self, matrix: Matrix) -> Vector:
        """
        Coordinates of a member of the space.

        Raises:
            ModuleError: the matrix lies outside the space
        """
        v = self.flatten(matrix)
        if not self._space.contains(v):
            raise ModuleError("map lies outside the Hom space")
        return self._space.coordinates(v)


@dataclass
class HomModule:
    """
    A space of maps carrying a module structure.

    ``change`` takes coordinates in ``module`` to coordinates in ``space``.
    """

    module: LeftModule
    space: MapSpace
    change: Matrix
    change_inv: Matrix

    @property
    def dim(self) -> int:
        return self.module.dim

    def map_of(self, v: Vector) -> Matrix:
        if self.dim == 0:
            return zeros(self.space.field, self.space.n_rows, self.space.n_cols)
        return self.space.element(mat_vec(self.space.field, self.change, v))

    def vector_of(self, matrix: Matrix) -> Vector:
        if self.dim == 0:
            return []
        return mat_vec(self.space.field, self.change_inv, self.space.coordinates(matrix))

    def basis_map(self, k: int) -> Matrix:
        field = self.space.field
        v = [field.zero] * self.dim
        v[k] = field.one
        return self.map_of(v)


def hom_module(
    maps: Sequence[Matrix],
    n_rows: int,
    n_cols: int,
    algebra: Algebra,
    act: MapAction,
    name: str = "Hom",
) -> HomModule:
    """
    The span of ``maps`` as a left module over ``algebra``.

    Args:
        maps: Spanning maps (n_rows x n_cols)
        algebra: Algebra acting on the maps
        act: ``act(b, f)`` is the action of basis element b on the map f

    Raises:
        ModuleError: the action leaves the span
    """
    field = algebra.field
    space = MapSpace(field, maps, n_rows, n_cols)
    n = space.dimension
    basis = space.basis()
    actions = []
    for b in range(algebra.dim):
        matrix = zeros(field, n, n)
        for k, f in enumerate(basis):
            for r, x in enumerate(space.coordinates(act(b, f))):
                matrix[r][k] = x
        actions.append(matrix)
    module, change, change_inv = adapt_module(LeftModule(algebra, n, actions, name=name))
    logger.debug(f"{name}: Hom module of dimension {n} over {algebra.name}")
    return HomModule(module, space, change, change_inv)


def hom_to_regular(module: LeftModule) -> HomModule:
    """Hom_A(M, A) as a left A^op-module: (f b)(m) = f(m) b."""
    algebra = module.algebra
    regular = regular_module(algebra)
    field = algebra.field
    maps = hom_space(module, regular)

    def act(b: int, f: Matrix) -> Matrix:
        return compose(field, algebra.right_matrix(b), f, algebra.dim, module.dim)

    return hom_module(maps, algebra.dim, module.dim, algebra.opposite(), act, name=f"Hom({module.name},A)")


def precompose_map(f: Matrix, source: LeftModule, target: LeftModule, hom_source: HomModule, hom_target: HomModule) -> Matrix:
    """
    Hom(f, X): Hom(target, X) -> Hom(source, X), g -> g o f.

    Args:
        f: source -> target
        hom_source: Hom(source, X)
        hom_target: Hom(target, X)
    """
    field = source.field
    out = zeros(field, hom_source.dim, hom_target.dim)
    for k in range(hom_target.dim):
        g = hom_target.basis_map(k)
        column = hom_source.vector_of(compose(field, g, f, target.dim, source.dim))
        for r, x in enumerate(column):
            out[r][k] = x
    return out


def nakayama(module: LeftModule) -> LeftModule:
    """
    ν(P) = D Hom_A(P, A).

    Raises:
        ModuleError: P is not projective
    """
    if not is_projective(module):
        raise ModuleError(f"{module.name} is not projective")
    result = dual_module(hom_to_regular(module).module)
    result.name = f"ν{module.name}"
    return result


def nakayama_map(f: Matrix, source: LeftModule, target: LeftModule) -> Matrix:
    """ν(f): ν(source) -> ν(target) in the bases used by ``nakayama``."""
    hom_source, hom_target = hom_to_regular(source), hom_to_regular(target)
    pulled = precompose_map(f, source, target, hom_source, hom_target)
    return dual_map(pulled, hom_target.module, hom_source.module)


def module_as_bimodule(module: LeftModule) -> Bimodule:
    """A left A-module as an (A, K)-bimodule."""
    k = field_algebra(module.field)
    return Bimodule(module.algebra, k, module.dim, module.actions, [identity(module.field, module.dim)], name=module.name)


def tensor_module(bimodule: Bimodule, module: LeftModule) -> TensorProduct:
    """B (x)_A M; the left module is ``result.bimodule.left_module()``."""
    return tensor_over_algebra(bimodule, module_as_bimodule(module), name=f"{bimodule.name}⊗{module.name}")


def hom_from_bimodule(bimodule: Bimodule, module: LeftModule) -> HomModule:
    """Hom_A(B, M) for an (A, A)-bimodule B as a left A-module: (a f)(x) = f(x a)."""
    field = module.field
    left = bimodule.left_module()
    if left.algebra is not module.algebra:
        raise ModuleError("bimodule and module live over different algebras")
    maps = hom_space(left, module)

    def act(b: int, f: Matrix) -> Matrix:
        return compose(field, f, bimodule.right_actions[b], bimodule.dim, bimodule.dim)

    return hom_module(maps, module.dim, bimodule.dim, module.algebra, act, name=f"Hom({bimodule.name},{module.name})")
