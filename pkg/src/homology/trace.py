"""
Trace maps of projective modules over group algebras and the tensor-Hom
adjunction along an arrow biset.

A group algebra carries the symmetric form φ(Σ a_g g) = a_1. For a finitely
generated projective P with dual basis (x_k, θ_k) the trace is

    tr_P(f) = Σ_k φ(θ_k(f(x_k))),

and t_{M,P}: Hom(M, P) -> D Hom(P, M), f -> (g -> tr_P(f g)) is a bijection.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.algebra.algebra import Algebra
from src.algebra.bimodule import TensorProduct, biset_bimodule, tensor_over_algebra
from src.algebra.modules import LeftModule, compose, hom_space, quotient_by_echelon
from src.errors import ModuleError
from src.groups.bisets import Biset, dual_biset, orbit_reps
from src.homology.functors import MapSpace, module_as_bimodule
from src.homology.radical import radical_layer
from src.homology.representations import free_module
from src.scalars.linalg import (
    Matrix,
    Vector,
    identity,
    inverse,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    rank,
    solve,
    transpose,
    zeros,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _unit(field, n: int, k: int) -> Vector:
    out = [field.zero] * n
    out[k] = field.one
    return out


class DualBasis:
    """
    A dual basis (x_k, θ_k) of a projective module over a group algebra.

    The x_k are top generators of P and θ = (θ_k) is a section of the
    surjection A^r -> P sending the k-th free generator to x_k.

    Raises:
        ModuleError: P is not projective
    """

    def __init__(self, module: LeftModule):
        algebra, field = module.algebra, module.field
        if algebra.n_vertices != 1:
            raise ModuleError("trace maps are defined over group algebras")
        self.module = module
        self.algebra = algebra
        self.field = field
        if module.dim == 0:
            self.generators: List[Vector] = []
            self.section: Matrix = []
            return
        _, _, tops = quotient_by_echelon(module, radical_layer(module), name=f"top {module.name}")
        self.generators = [_unit(field, module.dim, g) for g in tops]
        free = free_module(algebra, len(tops), name=f"A^{len(tops)}")
        columns = [module.act(b, x) for x in self.generators for b in range(algebra.dim)]
        surjection = transpose(columns, module.dim)
        self.section = self._split(free, surjection)
        logger.debug(f"dual basis of {module.name} with {len(tops)} generators")

    def _split(self, free: LeftModule, surjection: Matrix) -> Matrix:
        field, n = self.field, self.module.dim
        candidates = hom_space(self.module, free)
        images = [mat_mul(field, surjection, h, free.dim, n) for h in candidates]
        rows = [[image[r][c] for image in images] for r in range(n) for c in range(n)]
        target = [x for row in identity(field, n) for x in row]
        coeffs = solve(field, rows, target, len(images))
        if coeffs is None:
            raise ModuleError(f"{self.module.name} is not projective")
        out = zeros(field, free.dim, n)
        for c, h in zip(coeffs, candidates):
            out = mat_add(field, out, mat_scale(field, c, h))
        return out

    def theta(self, k: int, v: Vector) -> Vector:
        """θ_k(v) as an element of the group algebra."""
        d = self.algebra.dim
        return mat_vec(self.field, self.section[k * d:(k + 1) * d], v)

    def symmetric_form(self, a: Vector):
        """φ: the coefficient at the group identity."""
        return a[self.algebra.idempotents[0]]

    def trace(self, f: Matrix):
        """tr_P(f) for an endomorphism f of P."""
        field = self.field
        total = field.zero
        for k, x in enumerate(self.generators):
            total = field.add(total, self.symmetric_form(self.theta(k, mat_vec(field, f, x))))
        return total

    def check(self) -> Tuple[bool, Optional[str]]:
        """x = Σ θ_k(x) x_k on every basis vector."""
        field, module = self.field, self.module
        for c in range(module.dim):
            x = _unit(field, module.dim, c)
            total = [field.zero] * module.dim
            for k, generator in enumerate(self.generators):
                coeff = self.theta(k, x)
                for b, a in enumerate(coeff):
                    if a != field.zero:
                        total = [field.add(s, field.mul(a, y)) for s, y in zip(total, module.act(b, generator))]
            if total != x:
                return False, f"dual basis of {module.name} does not reproduce basis vector {c}"
        return True, None


def trace(projective: LeftModule, f: Matrix):
    """tr_P(f) for an endomorphism f of a projective module P."""
    return DualBasis(projective).trace(f)


@dataclass
class TracePairing:
    """t_{M,P} as the matrix of the pairing Hom(M, P) x Hom(P, M) -> K."""

    matrix: Matrix
    hom_mp: List[Matrix]
    hom_pm: List[Matrix]

    def is_bijective(self, field) -> bool:
        n = len(self.hom_mp)
        if n != len(self.hom_pm):
            return False
        return n == 0 or rank(field, self.matrix, n) == n


def trace_pairing(module: LeftModule, projective: LeftModule) -> TracePairing:
    """
    matrix[r][c] = tr_P(f_r g_c) for bases (f_r) of Hom(M, P) and (g_c) of Hom(P, M).

    Raises:
        ModuleError: P is not projective or the modules live over different algebras
    """
    if module.algebra is not projective.algebra:
        raise ModuleError("trace pairing needs modules over one algebra")
    field = module.field
    dual = DualBasis(projective)
    hom_mp, hom_pm = hom_space(module, projective), hom_space(projective, module)
    matrix = [
        [dual.trace(compose(field, f, g, module.dim, projective.dim)) for g in hom_pm]
        for f in hom_mp
    ]
    return TracePairing(matrix, hom_mp, hom_pm)


class Adjunction:
    """
    ad: Hom_{A_t}(KX (x)_{A_s} M, N) -> Hom_{A_s}(M, KX* (x)_{A_t} N),

        f^∨(m) = Σ_{b in L} b* (x) f(b (x) m),

    L the left orbit representatives of X, and its inverse g -> g^∧ with
    g^∧(h b (x) m) = h g_{m,b} where g(m) = Σ_b b* (x) g_{m,b}.

    Args:
        biset: The (X(t), X(s))-biset X
        target_algebra: A_t
        source_algebra: A_s
        module: M over A_s
        target: N over A_t

    Raises:
        ModuleError: X is not free on the left
    """

    def __init__(self, biset: Biset, target_algebra: Algebra, source_algebra: Algebra, module: LeftModule, target: LeftModule):
        self.biset = biset
        self.module = module
        self.target = target
        self.field = field = module.field
        self.reps = orbit_reps(biset, "left")
        if len(self.reps) * biset.left_group.order != biset.size:
            raise ModuleError("the adjunction needs a biset free on the left")
        self.left_tensor: TensorProduct = tensor_over_algebra(
            biset_bimodule(biset, target_algebra, source_algebra), module_as_bimodule(module), name="KX⊗M"
        )
        self.right_tensor: TensorProduct = tensor_over_algebra(
            biset_bimodule(dual_biset(biset), source_algebra, target_algebra), module_as_bimodule(target), name="KX*⊗N"
        )
        left_dim, right_dim = self.left_tensor.bimodule.dim, self.right_tensor.bimodule.dim
        self.source_space = MapSpace(field, hom_space(self.left_tensor.bimodule.left_module(), target), target.dim, left_dim)
        self.target_space = MapSpace(field, hom_space(module, self.right_tensor.bimodule.left_module()), right_dim, module.dim)

        self._solver: Optional[Matrix] = None
        if right_dim:
            pures = [self.right_tensor.pure(b, n) for b in self.reps for n in range(target.dim)]
            if len(pures) != right_dim:
                raise ModuleError("KX* (x) N is not free over the left orbit representatives")
            self._solver = inverse(field, transpose(pures, right_dim))
            if self._solver is None:
                raise ModuleError("left orbit representatives do not split KX* (x) N")
        self._position = {}
        for h in biset.left_group.elements():
            for b in self.reps:
                self._position.setdefault(biset.act_left(h, b), (h, b))

    def vee(self, f: Matrix) -> Matrix:
        """f^∨ for f: KX (x) M -> N."""
        field, module = self.field, self.module
        right_dim = self.right_tensor.bimodule.dim
        columns = []
        for m in range(module.dim):
            total = [field.zero] * right_dim
            for b in self.reps:
                image = mat_vec(field, f, self.left_tensor.pure(b, m)) if self.left_tensor.bimodule.dim else [field.zero] * self.target.dim
                part = self.right_tensor.tensor(_unit(field, self.biset.size, b), image)
                total = [field.add(x, y) for x, y in zip(total, part)]
            columns.append(total)
        return transpose(columns, right_dim) if columns else [[] for _ in range(right_dim)]

    def components(self, g: Matrix, m: int) -> dict:
        """g(m) = Σ_b b* (x) g_{m,b}; returns {b: g_{m,b}}."""
        field, n = self.field, self.target.dim
        if self._solver is None:
            return {b: [field.zero] * n for b in self.reps}
        column = [row[m] for row in g]
        coords = mat_vec(field, self._solver, column)
        return {b: coords[k * n:(k + 1) * n] for k, b in enumerate(self.reps)}

    def wedge(self, g: Matrix) -> Matrix:
        """g^∧ for g: M -> KX* (x) N."""
        field, target = self.field, self.target
        parts = [self.components(g, m) for m in range(self.module.dim)]
        columns = []
        for x, m in self.left_tensor.pairs:
            h, b = self._position[x]
            columns.append(target.act(h, parts[m][b]))
        return transpose(columns, target.dim) if columns else [[] for _ in range(target.dim)]

    def matrices(self) -> Tuple[Matrix, Matrix]:
        """(ad, ad^-1) in the coordinates of the two Hom spaces."""
        vee = [self.target_space.coordinates(self.vee(f)) for f in self.source_space.basis()]
        wedge = [self.source_space.coordinates(self.wedge(g)) for g in self.target_space.basis()]
        return (
            transpose(vee, self.target_space.dimension) if vee else [[] for _ in range(self.target_space.dimension)],
            transpose(wedge, self.source_space.dimension) if wedge else [[] for _ in range(self.source_space.dimension)],
        )

    def check_inverse(self) -> Tuple[bool, Optional[str]]:
        """ad and (-)^∧ are mutually inverse."""
        field = self.field
        n, m = self.source_space.dimension, self.target_space.dimension
        if n != m:
            return False, f"Hom spaces have dimensions {n} and {m}"
        if n == 0:
            return True, None
        vee, wedge = self.matrices()
        if mat_mul(field, wedge, vee) != identity(field, n) or mat_mul(field, vee, wedge) != identity(field, n):
            return False, "ad and its inverse do not compose to the identity"
        return True, None
