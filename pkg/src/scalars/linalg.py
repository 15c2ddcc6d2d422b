"""
Exact linear algebra over a FieldDescriptor.

Matrices are lists of rows of raw field elements; vectors are lists. Prime
fields with small p take a vectorised numpy route for elimination and products.
Sparse incremental echelon forms (``EchelonBasis``) back the degreewise ideal
computations.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.config import settings
from src.scalars.fields import FieldDescriptor, PrimeField

Matrix = List[List]
Vector = List
SparseVector = Dict[int, object]

NUMPY_PRIME_LIMIT = 2 ** 25


def _numpy_prime(field: FieldDescriptor) -> Optional[int]:
    if settings.engine.use_numpy and isinstance(field, PrimeField) and field.p < NUMPY_PRIME_LIMIT:
        return field.p
    return None


def zeros(field: FieldDescriptor, n_rows: int, n_cols: int) -> Matrix:
    return [[field.zero] * n_cols for _ in range(n_rows)]


def identity(field: FieldDescriptor, n: int) -> Matrix:
    out = zeros(field, n, n)
    for i in range(n):
        out[i][i] = field.one
    return out


def transpose(a: Matrix, n_cols: Optional[int] = None) -> Matrix:
    if not a:
        return [[] for _ in range(n_cols or 0)]
    return [list(col) for col in zip(*a)]


def from_ints(field: FieldDescriptor, rows: Sequence[Sequence[int]]) -> Matrix:
    return [[field.from_int(x) for x in row] for row in rows]


def is_zero_matrix(field: FieldDescriptor, a: Matrix) -> bool:
    return all(x == field.zero for row in a for x in row)


def mat_add(field: FieldDescriptor, a: Matrix, b: Matrix) -> Matrix:
    return [[field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(field: FieldDescriptor, a: Matrix, b: Matrix) -> Matrix:
    return [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(field: FieldDescriptor, s, a: Matrix) -> Matrix:
    return [[field.mul(s, x) for x in row] for row in a]


def mat_mul(field: FieldDescriptor, a: Matrix, b: Matrix, inner: Optional[int] = None, n_cols: Optional[int] = None) -> Matrix:
    """
    Matrix product a @ b.

    Args:
        field: Coefficient field
        a: Left factor (rows)
        b: Right factor (rows)
        inner: Shared dimension, needed only when a has no rows or b is empty
        n_cols: Column count of b, needed only when b has no rows

    Returns:
        Product matrix
    """
    n_rows = len(a)
    inner = len(b) if inner is None else inner
    if n_cols is None:
        n_cols = len(b[0]) if b else 0
    if n_rows == 0 or n_cols == 0:
        return [[] for _ in range(n_rows)] if n_cols == 0 else []
    if inner == 0:
        return zeros(field, n_rows, n_cols)

    p = _numpy_prime(field)
    if p is not None:
        prod = (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)) % p
        return prod.tolist()

    zero = field.zero
    out = zeros(field, n_rows, n_cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x == zero:
                continue
            bk = b[k]
            for j in range(n_cols):
                y = bk[j]
                if y != zero:
                    acc[j] = field.add(acc[j], field.mul(x, y))
    return out


def mat_vec(field: FieldDescriptor, a: Matrix, v: Vector) -> Vector:
    zero = field.zero
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x != zero and y != zero:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out


def vec_add(field: FieldDescriptor, u: Vector, v: Vector) -> Vector:
    return [field.add(x, y) for x, y in zip(u, v)]


def vec_sub(field: FieldDescriptor, u: Vector, v: Vector) -> Vector:
    return [field.sub(x, y) for x, y in zip(u, v)]


def linear_combination(field: FieldDescriptor, coeffs: Sequence, vectors: Sequence[Vector], length: int) -> Vector:
    out = [field.zero] * length
    for c, v in zip(coeffs, vectors):
        if c == field.zero:
            continue
        for i, x in enumerate(v):
            if x != field.zero:
                out[i] = field.add(out[i], field.mul(c, x))
    return out


def _rref_numpy(p: int, rows: Matrix, n_cols: int) -> Tuple[Matrix, List[int]]:
    a = np.array(rows, dtype=np.int64).reshape(len(rows), n_cols) % p
    pivots: List[int] = []
    r = 0
    n_rows = a.shape[0]
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r].tolist(), pivots


def _rref_generic(field: FieldDescriptor, rows: Matrix, n_cols: int) -> Tuple[Matrix, List[int]]:
    zero = field.zero
    a = [list(row) for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == len(a):
            break
        pivot = next((i for i in range(r, len(a)) if a[i][c] != zero), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        head = a[r]
        for j in range(c, n_cols):
            if head[j] != zero:
                head[j] = field.mul(inv, head[j])
        for i in range(len(a)):
            f = a[i][c]
            if i == r or f == zero:
                continue
            row = a[i]
            for j in range(c, n_cols):
                if head[j] != zero:
                    row[j] = field.sub(row[j], field.mul(f, head[j]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(field: FieldDescriptor, rows: Matrix, n_cols: int) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form.

    Args:
        field: Coefficient field
        rows: Matrix rows
        n_cols: Column count (rows may be empty)

    Returns:
        (nonzero RREF rows, pivot columns)
    """
    if not rows or n_cols == 0:
        return [], []
    p = _numpy_prime(field)
    if p is not None:
        return _rref_numpy(p, rows, n_cols)
    return _rref_generic(field, rows, n_cols)


def rank(field: FieldDescriptor, rows: Matrix, n_cols: int) -> int:
    return len(rref(field, rows, n_cols)[1])


def nullspace(field: FieldDescriptor, rows: Matrix, n_cols: int) -> List[Vector]:
    """Basis of {x : A x = 0}, one vector per free column."""
    reduced, pivots = rref(field, rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        v = [field.zero] * n_cols
        v[f] = field.one
        for i, c in enumerate(pivots):
            v[c] = field.neg(reduced[i][f])
        basis.append(v)
    return basis


def solve(field: FieldDescriptor, a: Matrix, b: Vector, n_cols: int) -> Optional[Vector]:
    """A particular solution of A x = b, or None."""
    augmented = [list(row) + [bi] for row, bi in zip(a, b)]
    reduced, pivots = rref(field, augmented, n_cols + 1)
    if pivots and pivots[-1] == n_cols:
        return None
    x = [field.zero] * n_cols
    for i, c in enumerate(pivots):
        x[c] = reduced[i][n_cols]
    return x


def inverse(field: FieldDescriptor, a: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None when singular."""
    n = len(a)
    if n == 0:
        return []
    augmented = [list(row) + unit for row, unit in zip(a, identity(field, n))]
    reduced, pivots = rref(field, augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return [row[n:] for row in reduced[:n]]


def column_space(field: FieldDescriptor, a: Matrix, n_rows: int) -> List[Vector]:
    """RREF basis of the span of the columns of a."""
    return rref(field, transpose(a), n_rows)[0]


class Subspace:
    """
    A subspace of field^dim held by its RREF basis.

    Coordinates of a member v are read off at the pivot columns.
    """

    def __init__(self, field: FieldDescriptor, vectors: Iterable[Vector], dim: int):
        self.field = field
        self.dim = dim
        self.basis, self.pivots = rref(field, [list(v) for v in vectors], dim)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Vector) -> Vector:
        return [v[p] for p in self.pivots]

    def element(self, coords: Sequence) -> Vector:
        return linear_combination(self.field, coords, self.basis, self.dim)

    def contains(self, v: Vector) -> bool:
        residual = vec_sub(self.field, list(v), self.element(self.coordinates(v)))
        return all(x == self.field.zero for x in residual)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dimension} in {self.dim})"


class EchelonBasis:
    """
    Incremental fully reduced echelon basis of sparse vectors.

    Rows are kept with a leading one at their pivot and zeros at every other
    pivot, so reduction by a row never reintroduces another pivot.
    """

    def __init__(self, field: FieldDescriptor, dim: int):
        self.field = field
        self.dim = dim
        self.rows: Dict[int, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_full(self) -> bool:
        return len(self.rows) == self.dim

    def reduce(self, vec: SparseVector) -> SparseVector:
        field = self.field
        zero = field.zero
        v = {k: x for k, x in vec.items() if x != zero}
        for c in [k for k in v if k in self.rows]:
            coef = v.get(c, zero)
            if coef == zero:
                continue
            for k, x in self.rows[c].items():
                new = field.sub(v.get(k, zero), field.mul(coef, x))
                if new == zero:
                    v.pop(k, None)
                else:
                    v[k] = new
        return v

    def add(self, vec: SparseVector) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        field = self.field
        zero = field.zero
        v = self.reduce(vec)
        if not v:
            return False
        c = min(v)
        inv = field.inv(v[c])
        v = {k: field.mul(inv, x) for k, x in v.items()}
        for row in self.rows.values():
            coef = row.get(c, zero)
            if coef == zero:
                continue
            for k, x in v.items():
                new = field.sub(row.get(k, zero), field.mul(coef, x))
                if new == zero:
                    row.pop(k, None)
                else:
                    row[k] = new
        self.rows[c] = v
        return True

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def complement(self) -> List[int]:
        """Non-pivot coordinates: the standard quotient basis."""
        return [k for k in range(self.dim) if k not in self.rows]

    def quotient_coordinates(self, vec: SparseVector, complement: Sequence[int]) -> Vector:
        nf = self.reduce(vec)
        return [nf.get(k, self.field.zero) for k in complement]

    def basis_vectors(self) -> List[Vector]:
        out = []
        for c in self.pivots():
            row = [self.field.zero] * self.dim
            for k, x in self.rows[c].items():
                row[k] = x
            out.append(row)
        return out

    def kernel_basis(self) -> List[Vector]:
        """Null space of the rows read as homogeneous equations."""
        field = self.field
        out = []
        for f in self.complement():
            x = [field.zero] * self.dim
            x[f] = field.one
            for p, row in self.rows.items():
                x[p] = field.neg(row.get(f, field.zero))
            out.append(x)
        return out


def dense_to_sparse(field: FieldDescriptor, v: Vector) -> SparseVector:
    return {i: x for i, x in enumerate(v) if x != field.zero}
