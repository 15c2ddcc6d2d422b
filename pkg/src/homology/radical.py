"""
Jacobson radicals of finite-dimensional algebras.

Characteristic zero uses the kernel of the trace form (a, b) -> Tr L_{ab}.
Over GF(p) the radical is cut out by the p-power trace functionals

    g_i(a) = (Tr(Â^(p^i)) mod p^(i+1)) / p^i,    0 <= i <= floor(log_p n),

with Â the integer lift of the left regular matrix of a; each step keeps
the a in the previous ideal with g_i(a b) = 0 for every basis element b.
GF(p^k) reduces to GF(p) by restriction of scalars. Category algebras of
acyclic EI quivers skip all of this: their radical is the span of the
positive-length morphisms plus the radicals of the vertex group algebras.
"""

from typing import List

import numpy as np

from src.algebra.algebra import Algebra, group_algebra
from src.algebra.modules import LeftModule
from src.errors import FieldError
from src.scalars.fields import ExtensionField, FieldDescriptor, PrimeField, make_field
from src.scalars.linalg import EchelonBasis, Matrix, Vector, dense_to_sparse, linear_combination, mat_vec, nullspace, rref
from src.utils.logger import get_logger

logger = get_logger(__name__)

INT64_SAFE = 2 ** 62


def _unit(field: FieldDescriptor, n: int, k: int) -> Vector:
    v = [field.zero] * n
    v[k] = field.one
    return v


def _trace_form_radical(algebra: Algebra) -> Matrix:
    field = algebra.field
    n = algebra.dim
    traces = []
    for c in range(n):
        t = field.zero
        for k in range(n):
            t = field.add(t, algebra.mul_basis(c, k).get(k, field.zero))
        traces.append(t)
    form = []
    for i in range(n):
        row = []
        for j in range(n):
            value = field.zero
            for c, x in algebra.mul_basis(i, j).items():
                value = field.add(value, field.mul(x, traces[c]))
            row.append(value)
        form.append(row)
    return nullspace(field, form, n)


def _regular_stack(algebra: Algebra) -> np.ndarray:
    """Left regular matrices L_c stacked along the first axis."""
    return np.array([algebra.left_matrix(c) for c in range(algebra.dim)], dtype=np.int64).reshape(
        algebra.dim, algebra.dim, algebra.dim
    )


def _power_trace(matrix: np.ndarray, exponent: int, modulus: int) -> int:
    """Tr(matrix^exponent) mod modulus, exactly."""
    n = matrix.shape[0]
    dtype = np.int64 if modulus * modulus * n < INT64_SAFE else object
    base = matrix.astype(dtype) % modulus
    result = np.identity(n, dtype=np.int64).astype(dtype)
    while exponent:
        if exponent & 1:
            result = result.dot(base) % modulus
        base = base.dot(base) % modulus
        exponent >>= 1
    return int(np.trace(result)) % modulus


def _prime_field_radical(algebra: Algebra) -> Matrix:
    field = algebra.field
    p = field.p
    n = algebra.dim
    stack = _regular_stack(algebra)
    steps = 0
    while p ** (steps + 1) <= n:
        steps += 1

    basis: Matrix = [_unit(field, n, k) for k in range(n)]
    for i in range(steps + 1):
        if not basis:
            break
        power, modulus = p ** i, p ** (i + 1)
        lifts = [np.tensordot(np.array(a, dtype=np.int64), stack, axes=1) % p for a in basis]
        equations = []
        for j in range(n):
            row = []
            for lifted in lifts:
                product = lifted.dot(stack[j]) % p
                row.append((_power_trace(product, power, modulus) // power) % p)
            equations.append(row)
        coefficients = nullspace(field, equations, len(basis))
        basis = rref(field, [linear_combination(field, c, basis, n) for c in coefficients], n)[0]
        logger.debug(f"p-power trace step {i}: ideal of dimension {len(basis)}")
    return basis


def _scalar_restriction(algebra: Algebra) -> Algebra:
    """A over GF(p^k) as an algebra over GF(p) with basis b_j t^s."""
    field: ExtensionField = algebra.field
    prime = make_field({"kind": "prime", "p": field.p})
    k = field.k
    t_powers = [field.from_coordinates(_unit(prime, k, s)) for s in range(k)]
    products = {}
    for (i, j), product in algebra.products.items():
        for s in range(k):
            for r in range(k):
                scale = field.mul(t_powers[s], t_powers[r])
                out = {}
                for c, x in product.items():
                    for u, d in enumerate(field.coordinates(field.mul(x, scale))):
                        if d:
                            out[c * k + u] = d
                if out:
                    products[(i * k + s, j * k + r)] = out
    return Algebra(
        prime,
        [f"{label}·t^{s}" for label in algebra.labels for s in range(k)],
        products,
        [e * k for e in algebra.idempotents],
        [block for block in algebra.blocks for _ in range(k)],
        name=f"{algebra.name}|GF({field.p})",
    )


def _extension_field_radical(algebra: Algebra) -> Matrix:
    field: ExtensionField = algebra.field
    k = field.k
    restricted = radical(_scalar_restriction(algebra))
    vectors = [
        [field.from_coordinates(v[j * k:(j + 1) * k]) for j in range(algebra.dim)]
        for v in restricted
    ]
    return rref(field, vectors, algebra.dim)[0]


def _category_radical(algebra: Algebra) -> Matrix:
    category = algebra.category
    field = algebra.field
    n = algebra.dim
    vectors = [_unit(field, n, k) for k, m in enumerate(category.morphisms) if not m.path.is_trivial]
    quiver = category.ei_quiver.quiver
    for x in range(category.n_objects):
        group = category.ei_quiver.groups[x]
        if group.order == 1:
            continue
        path = quiver.trivial_path(x)
        positions = [category.index(path, g) for g in group.elements()]
        for local in radical(group_algebra(group, field)):
            v = [field.zero] * n
            for g, c in enumerate(local):
                v[positions[g]] = c
            vectors.append(v)
    return rref(field, vectors, n)[0]


def radical(algebra: Algebra) -> Matrix:
    """
    Basis of the Jacobson radical, in RREF, as vectors in the algebra basis.

    Args:
        algebra: A finite-dimensional algebra

    Returns:
        Basis rows of rad(A) (cached on the algebra)

    Raises:
        FieldError: the field kind has no radical algorithm
    """
    if algebra._radical is not None:
        return algebra._radical
    field = algebra.field
    if algebra.category is not None and algebra.category.ei_quiver.quiver.is_acyclic():
        basis = _category_radical(algebra)
    elif field.characteristic == 0:
        basis = _trace_form_radical(algebra)
    elif isinstance(field, PrimeField):
        basis = _prime_field_radical(algebra)
    elif isinstance(field, ExtensionField):
        basis = _extension_field_radical(algebra)
    else:
        raise FieldError(f"no radical algorithm for {field.label()}")
    logger.debug(f"rad({algebra.name}) has dimension {len(basis)} of {algebra.dim}")
    algebra._radical = basis
    return basis


def is_semisimple(algebra: Algebra) -> bool:
    return not radical(algebra)


def radical_layer(module: LeftModule) -> EchelonBasis:
    """rad(A) M as an echelon basis inside M."""
    field = module.field
    echelon = EchelonBasis(field, module.dim)
    if module.dim == 0:
        return echelon
    for r in radical(module.algebra):
        action = module.action_of(dense_to_sparse(field, r))
        for k in range(module.dim):
            echelon.add(dense_to_sparse(field, mat_vec(field, action, _unit(field, module.dim, k))))
            if echelon.is_full:
                return echelon
    return echelon


def top_dimension_vector(module: LeftModule) -> List[int]:
    """Dimension vector of top M = M / rad(A) M."""
    layer = radical_layer(module)
    dims = [0] * module.algebra.n_vertices
    for k in layer.complement():
        dims[module.vertex_of[k]] += 1
    return dims
