"""
Left modules over an Algebra, held by one action matrix per basis element.

Module bases are always adapted to the idempotents: every basis vector lies in
a single e_i M. Module maps are matrices in the column convention, so a map
f: M -> N is a dim N x dim M matrix.
"""

from functools import cached_property
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from src.algebra.algebra import Algebra
from src.errors import ModuleError
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import (
    EchelonBasis,
    column_space,
    inverse,
    Matrix,
    SparseVector,
    Vector,
    dense_to_sparse,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    transpose,
    zeros,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class LeftModule:
    """
    A finite-dimensional left module.

    Args:
        algebra: The acting algebra
        dim: Dimension over the field
        actions: ``actions[b]`` is the matrix of basis element b of the algebra
        name: Display name
    """

    def __init__(self, algebra: Algebra, dim: int, actions: Sequence[Matrix], name: str = "M"):
        if len(actions) != algebra.dim:
            raise ModuleError(f"need {algebra.dim} action matrices, got {len(actions)}")
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.actions = list(actions)
        self.name = name

    @cached_property
    def vertex_of(self) -> List[int]:
        """The vertex i with e_i v = v for every basis vector v."""
        field = self.field
        out = [-1] * self.dim
        for i, e in enumerate(self.algebra.idempotents):
            matrix = self.actions[e]
            for k in range(self.dim):
                column = [matrix[r][k] for r in range(self.dim)]
                if all(x == (field.one if r == k else field.zero) for r, x in enumerate(column)):
                    out[k] = i
        if any(v < 0 for v in out):
            raise ModuleError(f"basis of {self.name} is not adapted to the idempotents")
        return out

    def basis_at(self, i: int) -> List[int]:
        return [k for k, v in enumerate(self.vertex_of) if v == i]

    def dimension_vector(self) -> List[int]:
        dims = [0] * self.algebra.n_vertices
        for v in self.vertex_of:
            dims[v] += 1
        return dims

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def act(self, b: int, v: Vector) -> Vector:
        if self.dim == 0:
            return []
        return mat_vec(self.field, self.actions[b], v)

    def action_of(self, a: SparseVector) -> Matrix:
        out = zeros(self.field, self.dim, self.dim)
        for b, c in a.items():
            out = mat_add(self.field, out, mat_scale(self.field, c, self.actions[b]))
        return out

    def generator_indices(self) -> List[int]:
        return sorted(set(self.algebra.generators) | set(self.algebra.idempotents))

    def generator_actions(self) -> List[Matrix]:
        return [self.actions[b] for b in self.generator_indices()]

    def check_axioms(self) -> Tuple[bool, Optional[str]]:
        """Unit acts as 1 and generator products act as the product of actions."""
        field, algebra = self.field, self.algebra
        if self.dim == 0:
            return True, None
        if self.action_of(algebra.unit()) != identity(field, self.dim):
            return False, f"unit does not act as identity on {self.name}"
        for a in algebra.generators:
            for b in range(algebra.dim):
                product = self.action_of(algebra.mul_basis(a, b))
                composite = mat_mul(field, self.actions[a], self.actions[b])
                if product != composite:
                    return False, f"({algebra.labels[a]})({algebra.labels[b]}) acts wrongly on {self.name}"
        return True, None

    def __repr__(self) -> str:
        return f"LeftModule({self.name}, dim={self.dim}, over {self.algebra.name})"


def make_module(algebra: Algebra, dim: int, actions: Sequence[Matrix], name: str = "M") -> LeftModule:
    """
    Build a module and check the action laws.

    Raises:
        ModuleError: the matrices do not define a module
    """
    module = LeftModule(algebra, dim, actions, name)
    ok, error = module.check_axioms()
    if not ok:
        raise ModuleError(error)
    module.vertex_of
    return module


def regular_module(algebra: Algebra) -> LeftModule:
    return LeftModule(algebra, algebra.dim, [algebra.left_matrix(b) for b in range(algebra.dim)], name=algebra.name)


def projective_module(algebra: Algebra, i: int) -> Tuple[LeftModule, List[int]]:
    """
    A e_i with basis the algebra basis elements whose source is i.

    Returns:
        (module, basis indices of A spanning it)
    """
    basis = algebra.basis_with_source(i)
    position = {b: k for k, b in enumerate(basis)}
    actions = []
    for b in range(algebra.dim):
        matrix = zeros(algebra.field, len(basis), len(basis))
        for k, c in enumerate(basis):
            for target, x in algebra.mul_basis(b, c).items():
                matrix[position[target]][k] = x
        actions.append(matrix)
    return LeftModule(algebra, len(basis), actions, name=f"P{i + 1}"), basis


def zero_module(algebra: Algebra) -> LeftModule:
    return LeftModule(algebra, 0, [[] for _ in range(algebra.dim)], name="0")


def is_module_map(f: Matrix, source: LeftModule, target: LeftModule) -> bool:
    field = source.field
    if source.dim == 0 or target.dim == 0:
        return True
    for b in source.generator_indices():
        left = mat_mul(field, f, source.actions[b], source.dim, source.dim)
        right = mat_mul(field, target.actions[b], f, target.dim, source.dim)
        if left != right:
            return False
    return True


def _sparse_columns(field: FieldDescriptor, a: Matrix, n_rows: int, n_cols: int) -> List[Dict[int, object]]:
    return [{r: a[r][c] for r in range(n_rows) if a[r][c] != field.zero} for c in range(n_cols)]


def _sparse_rows(field: FieldDescriptor, a: Matrix) -> List[Dict[int, object]]:
    return [dense_to_sparse(field, row) for row in a]


def solve_intertwiners(
    field: FieldDescriptor,
    keys_source: Sequence[Hashable],
    keys_target: Sequence[Hashable],
    pairs: Sequence[Tuple[Matrix, Matrix]],
) -> List[Matrix]:
    """
    Basis of the maps F with F X = Y F for every (X, Y) in ``pairs``.

    Only entries F[r][c] with keys_target[r] == keys_source[c] are unknowns,
    which splits the equations into vertex blocks.
    """
    dim_m, dim_n = len(keys_source), len(keys_target)
    unknowns: Dict[Tuple[int, int], int] = {}
    for r in range(dim_n):
        for c in range(dim_m):
            if keys_target[r] == keys_source[c]:
                unknowns[(r, c)] = len(unknowns)
    if not unknowns:
        return []

    equations = EchelonBasis(field, len(unknowns))
    zero = field.zero
    for x, y in pairs:
        x_columns = _sparse_columns(field, x, dim_m, dim_m)
        y_rows = _sparse_rows(field, y)
        for c in range(dim_m):
            for r in range(dim_n):
                eq: Dict[int, object] = {}
                for k, value in x_columns[c].items():
                    u = unknowns.get((r, k))
                    if u is not None:
                        eq[u] = field.add(eq.get(u, zero), value)
                for k, value in y_rows[r].items():
                    u = unknowns.get((k, c))
                    if u is not None:
                        eq[u] = field.sub(eq.get(u, zero), value)
                if eq:
                    equations.add(eq)
        if equations.is_full:
            return []

    out = []
    for solution in equations.kernel_basis():
        matrix = zeros(field, dim_n, dim_m)
        for (r, c), u in unknowns.items():
            matrix[r][c] = solution[u]
        out.append(matrix)
    return out


def hom_space(source: LeftModule, target: LeftModule) -> List[Matrix]:
    """Basis of Hom_A(source, target) as dim target x dim source matrices."""
    if source.algebra is not target.algebra:
        raise ModuleError("modules over different algebras")
    if source.dim == 0 or target.dim == 0:
        return []
    pairs = [(source.actions[b], target.actions[b]) for b in source.generator_indices()]
    return solve_intertwiners(source.field, source.vertex_of, target.vertex_of, pairs)


def _closure(field: FieldDescriptor, dim: int, operators: Sequence[Matrix], vectors: Sequence[Vector]) -> EchelonBasis:
    """Smallest subspace containing ``vectors`` and stable under ``operators``."""
    echelon = EchelonBasis(field, dim)
    queue = [list(v) for v in vectors]
    while queue:
        v = queue.pop()
        if not echelon.add(dense_to_sparse(field, v)):
            continue
        for op in operators:
            queue.append(mat_vec(field, op, v))
    return echelon


def _restricted_action(field: FieldDescriptor, echelon: EchelonBasis, matrix: Matrix) -> Matrix:
    """Matrix of an operator on a stable subspace in its echelon basis."""
    pivots = echelon.pivots()
    basis = echelon.basis_vectors()
    out = zeros(field, len(pivots), len(pivots))
    for k, v in enumerate(basis):
        w = mat_vec(field, matrix, v)
        for r, p in enumerate(pivots):
            out[r][k] = w[p]
    return out


def _quotient_action(field: FieldDescriptor, echelon: EchelonBasis, complement: Sequence[int], matrix: Matrix) -> Matrix:
    """Matrix of an operator on V/S in the basis of complement coordinates."""
    n = len(complement)
    out = zeros(field, n, n)
    for k, c in enumerate(complement):
        column = {r: matrix[r][c] for r in range(len(matrix)) if matrix[r][c] != field.zero}
        coords = echelon.quotient_coordinates(column, complement)
        for r in range(n):
            out[r][k] = coords[r]
    return out


def projection_matrix(field: FieldDescriptor, echelon: EchelonBasis, complement: Sequence[int]) -> Matrix:
    """V -> V/S in complement coordinates."""
    out = zeros(field, len(complement), echelon.dim)
    for c in range(echelon.dim):
        coords = echelon.quotient_coordinates({c: field.one}, complement)
        for r, x in enumerate(coords):
            out[r][c] = x
    return out


def submodule(module: LeftModule, vectors: Sequence[Vector], name: str = "S") -> Tuple[LeftModule, Matrix]:
    """
    The submodule generated by ``vectors``.

    Returns:
        (submodule, inclusion matrix)
    """
    field = module.field
    if module.dim == 0:
        return zero_module(module.algebra), []
    echelon = _closure(field, module.dim, module.generator_actions(), vectors)
    actions = [_restricted_action(field, echelon, a) for a in module.actions]
    inclusion = transpose(echelon.basis_vectors(), module.dim) if echelon.rank else [[] for _ in range(module.dim)]
    return LeftModule(module.algebra, echelon.rank, actions, name=name), inclusion


def quotient_by_echelon(module: LeftModule, echelon: EchelonBasis, name: str = "Q") -> Tuple[LeftModule, Matrix, List[int]]:
    """
    module / S for a submodule S held in echelon form.

    Returns:
        (quotient, projection matrix, complement coordinates spanning the quotient)
    """
    field = module.field
    complement = echelon.complement()
    actions = [_quotient_action(field, echelon, complement, a) for a in module.actions]
    quotient = LeftModule(module.algebra, len(complement), actions, name=name)
    return quotient, projection_matrix(field, echelon, complement), complement


def quotient_module(module: LeftModule, vectors: Sequence[Vector], name: str = "Q") -> Tuple[LeftModule, Matrix]:
    """
    module / (submodule generated by ``vectors``).

    The quotient basis is the classes of the non-pivot standard vectors.

    Returns:
        (quotient, projection matrix)
    """
    echelon = _closure(module.field, module.dim, module.generator_actions(), vectors)
    quotient, projection, _ = quotient_by_echelon(module, echelon, name)
    return quotient, projection


def kernel(f: Matrix, source: LeftModule, target: LeftModule, name: str = "K") -> Tuple[LeftModule, Matrix]:
    """Ker f with its inclusion into the source."""
    field = source.field
    if source.dim == 0:
        return zero_module(source.algebra), []
    if target.dim == 0:
        return source, identity(field, source.dim)
    equations = EchelonBasis(field, source.dim)
    for row in f:
        equations.add(dense_to_sparse(field, row))
    return submodule(source, equations.kernel_basis(), name=name)


def image_vectors(f: Matrix, source: LeftModule, target: LeftModule) -> List[Vector]:
    if source.dim == 0 or target.dim == 0:
        return []
    return transpose(f, source.dim)


def cokernel(f: Matrix, source: LeftModule, target: LeftModule, name: str = "C") -> Tuple[LeftModule, Matrix]:
    """Coker f with the projection from the target."""
    return quotient_module(target, image_vectors(f, source, target), name=name)


def map_rank(field: FieldDescriptor, f: Matrix, n_cols: int) -> int:
    echelon = EchelonBasis(field, n_cols)
    for row in f:
        echelon.add(dense_to_sparse(field, row))
    return echelon.rank


def direct_sum(modules: Sequence[LeftModule], name: str = "M") -> Tuple[LeftModule, List[Matrix], List[Matrix]]:
    """
    Block-diagonal direct sum.

    Returns:
        (sum, inclusions, projections)
    """
    if not modules:
        raise ModuleError("direct sum of no modules")
    algebra = modules[0].algebra
    field = algebra.field
    total = sum(m.dim for m in modules)
    offsets = []
    offset = 0
    for m in modules:
        offsets.append(offset)
        offset += m.dim
    actions = []
    for b in range(algebra.dim):
        matrix = zeros(field, total, total)
        for m, start in zip(modules, offsets):
            for r in range(m.dim):
                for c in range(m.dim):
                    matrix[start + r][start + c] = m.actions[b][r][c]
        actions.append(matrix)
    inclusions, projections = [], []
    for m, start in zip(modules, offsets):
        inc = zeros(field, total, m.dim)
        proj = zeros(field, m.dim, total)
        for k in range(m.dim):
            inc[start + k][k] = field.one
            proj[k][start + k] = field.one
        inclusions.append(inc)
        projections.append(proj)
    return LeftModule(algebra, total, actions, name=name), inclusions, projections


def dual_module(module: LeftModule) -> LeftModule:
    """D M = Hom_K(M, K) over A^op, (b phi)(m) = phi(b m)."""
    op = module.algebra.opposite()
    actions = [transpose(a, module.dim) if module.dim else [] for a in module.actions]
    return LeftModule(op, module.dim, actions, name=f"D{module.name}")


def dual_map(f: Matrix, source: LeftModule, target: LeftModule) -> Matrix:
    """D f: D target -> D source."""
    if source.dim == 0 or target.dim == 0:
        return zeros(source.field, source.dim, target.dim)
    return transpose(f, source.dim)


def compose(field: FieldDescriptor, f: Matrix, g: Matrix, inner: int, n_cols: int) -> Matrix:
    """f o g with explicit inner and column sizes so that empty modules are allowed."""
    rows = len(f)
    if inner == 0 or rows == 0 or n_cols == 0:
        return zeros(field, rows, n_cols)
    return mat_mul(field, f, g, inner, n_cols)


def is_isomorphism(field: FieldDescriptor, f: Matrix, n: int) -> bool:
    return len(f) == n and map_rank(field, f, n) == n


def adapted_basis(field: FieldDescriptor, dim: int, projectors: Sequence[Matrix]) -> Tuple[Matrix, Matrix]:
    """
    A basis made of the images of orthogonal idempotent projectors summing to 1.

    Returns:
        (change of basis T with the new basis as columns, its inverse)

    Raises:
        ModuleError: the images do not form a direct sum decomposition
    """
    columns: List[Vector] = []
    for projector in projectors:
        columns.extend(column_space(field, projector, dim))
    if len(columns) != dim:
        raise ModuleError(f"idempotent images span {len(columns)} of {dim} dimensions")
    change = transpose(columns, dim)
    change_inv = inverse(field, change)
    if change_inv is None:
        raise ModuleError("idempotent images are not independent")
    return change, change_inv


def conjugate(field: FieldDescriptor, matrix: Matrix, change: Matrix, change_inv: Matrix) -> Matrix:
    """T^-1 X T."""
    return mat_mul(field, change_inv, mat_mul(field, matrix, change))


def adapt_module(module: LeftModule) -> Tuple[LeftModule, Matrix, Matrix]:
    """
    The same module in a basis adapted to the idempotents.

    Returns:
        (module, T, T^-1) with T taking new coordinates to old ones
    """
    field = module.field
    if module.dim == 0:
        return module, [], []
    change, change_inv = adapted_basis(field, module.dim, [module.actions[e] for e in module.algebra.idempotents])
    actions = [conjugate(field, a, change, change_inv) for a in module.actions]
    return LeftModule(module.algebra, module.dim, actions, name=module.name), change, change_inv


def restrict_module(module: LeftModule, algebra: Algebra, images: Sequence[SparseVector], name: Optional[str] = None) -> LeftModule:
    """Restriction of scalars along an algebra map given on basis elements."""
    return LeftModule(algebra, module.dim, [module.action_of(image) for image in images], name=name or module.name)
