"""
Ext^1 from a two-term presentation.

For a presentation P0 --μ--> M -> 0 with kernel K ⊂ P0,

    Ext^1(M, N) = Hom(K, N) / {g|_K : g in Hom(P0, N)}.

Endomorphisms of M act on Ext^1(M, N) contravariantly through lifts to P0,
endomorphisms of N act covariantly by composition. Both give the bimodule
Ext^1(DΛ, Λ) and the module Ext^1(DΛ, M).
"""

from functools import cached_property
from typing import List, Optional

from src.algebra.algebra import Algebra
from src.algebra.bimodule import Bimodule, regular_bimodule
from src.algebra.modules import (
    LeftModule,
    adapt_module,
    adapted_basis,
    compose,
    conjugate,
    dual_module,
    hom_space,
    kernel,
    regular_module,
)
from src.errors import ModuleError
from src.homology.functors import MapSpace
from src.homology.resolution import TwoTermResolution, minimal_presentation
from src.scalars.linalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    Vector,
    dense_to_sparse,
    mat_add,
    mat_mul,
    mat_scale,
    solve,
    transpose,
    zeros,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ExtGroup:
    """
    Ext^1(M, N) with representatives in Hom(K, N).

    Args:
        presentation: A presentation of M (only P0 and μ are used)
        target: The module N
    """

    def __init__(self, presentation: TwoTermResolution, target: LeftModule):
        if presentation.module.algebra is not target.algebra:
            raise ModuleError("Ext arguments live over different algebras")
        self.presentation = presentation
        self.target = target
        self.field = target.field
        p0 = presentation.p0
        self.syzygy, self.inclusion = kernel(presentation.mu, p0, presentation.module, name="K")
        k, n = self.syzygy.dim, target.dim
        self.space = MapSpace(self.field, hom_space(self.syzygy, target), n, k)
        self.restrictions = EchelonBasis(self.field, self.space.dimension)
        for g in hom_space(p0, target):
            restricted = compose(self.field, g, self.inclusion, p0.dim, k)
            self.restrictions.add(dense_to_sparse(self.field, self.space.coordinates(restricted)))
        self.complement = self.restrictions.complement()
        logger.debug(
            f"Ext^1({presentation.module.name}, {target.name}): Hom(K, N) has dim {self.space.dimension}, "
            f"restrictions span {self.restrictions.rank}"
        )

    @property
    def dimension(self) -> int:
        return len(self.complement)

    def class_of(self, f: Matrix) -> Vector:
        """Coordinates of the class of f: K -> N."""
        coords = self.space.coordinates(f)
        return self.restrictions.quotient_coordinates(dense_to_sparse(self.field, coords), self.complement)

    def representative(self, k: int) -> Matrix:
        coords = [self.field.zero] * self.space.dimension
        coords[self.complement[k]] = self.field.one
        return self.space.element(coords)

    def basis(self) -> List[Matrix]:
        return [self.representative(k) for k in range(self.dimension)]

    @cached_property
    def _p0_endomorphisms(self) -> List[Matrix]:
        p0 = self.presentation.p0
        return hom_space(p0, p0)

    @cached_property
    def _syzygy_space(self) -> Subspace:
        return Subspace(self.field, transpose(self.inclusion, self.syzygy.dim), self.presentation.p0.dim)

    def lift(self, endomorphism: Matrix) -> Matrix:
        """
        g in End(P0) with μ g = r μ for an endomorphism r of M.

        Raises:
            ModuleError: no lift exists (P0 is not projective)
        """
        field, presentation = self.field, self.presentation
        m, p = presentation.module.dim, presentation.p0.dim
        target = compose(field, endomorphism, presentation.mu, m, p)
        candidates = [compose(field, presentation.mu, h, p, p) for h in self._p0_endomorphisms]
        rows = [[c[r][s] for c in candidates] for r in range(m) for s in range(p)]
        coeffs = solve(field, rows, [x for row in target for x in row], len(candidates))
        if coeffs is None:
            raise ModuleError("endomorphism does not lift to the projective cover")
        out = zeros(field, p, p)
        for c, h in zip(coeffs, self._p0_endomorphisms):
            out = mat_add(field, out, mat_scale(field, c, h))
        return out

    def contravariant_action(self, endomorphism: Matrix) -> Matrix:
        """Ext^1(r, N) for an endomorphism r of M."""
        field = self.field
        k = self.syzygy.dim
        lifted = self.lift(endomorphism)
        moved = compose(field, lifted, self.inclusion, self.presentation.p0.dim, k)
        restricted = transpose([self._syzygy_space.coordinates(col) for col in transpose(moved, k)], k) if k else []
        return self._induced(lambda f: compose(field, f, restricted, k, k))

    def covariant_action(self, endomorphism: Matrix) -> Matrix:
        """Ext^1(M, s) for an endomorphism s of N."""
        field = self.field
        n, k = self.target.dim, self.syzygy.dim
        return self._induced(lambda f: compose(field, endomorphism, f, n, k))

    def _induced(self, transform) -> Matrix:
        out = zeros(self.field, self.dimension, self.dimension)
        for c in range(self.dimension):
            for r, x in enumerate(self.class_of(transform(self.representative(c)))):
                out[r][c] = x
        return out


def ext1(module: LeftModule, target: LeftModule, presentation: Optional[TwoTermResolution] = None) -> ExtGroup:
    """Ext^1(M, N); the minimal presentation of M is used unless one is given."""
    return ExtGroup(presentation or minimal_presentation(module), target)


def dual_regular(algebra: Algebra) -> LeftModule:
    """DΛ as a left Λ-module: (b φ)(x) = φ(x b)."""
    module = dual_module(regular_bimodule(algebra).right_module())
    module.name = f"D{algebra.name}"
    return module


def _dual_right_actions(algebra: Algebra) -> List[Matrix]:
    """The right Λ-action on DΛ, (φ a)(x) = φ(a x), as endomorphisms of the left module."""
    return [transpose(algebra.left_matrix(a), algebra.dim) for a in range(algebra.dim)]


def ext_bimodule(algebra: Algebra, name: str = "E") -> Bimodule:
    """
    Ext^1_Λ(DΛ, Λ) as a Λ-Λ-bimodule.

    The left action comes from the right Λ-structure of DΛ, the right action
    from right multiplication on Λ. The basis is adapted to the pairs of
    vertex idempotents.
    """
    field = algebra.field
    group = ext1(dual_regular(algebra), regular_module(algebra))
    n = group.dimension
    left = [group.contravariant_action(r) for r in _dual_right_actions(algebra)]
    right = [group.covariant_action(algebra.right_matrix(b)) for b in range(algebra.dim)]
    if n:
        projectors = [mat_mul(field, left[e], right[f]) for e in algebra.idempotents for f in algebra.idempotents]
        change, change_inv = adapted_basis(field, n, projectors)
        left = [conjugate(field, a, change, change_inv) for a in left]
        right = [conjugate(field, b, change, change_inv) for b in right]
    logger.info(f"Ext^1(D{algebra.name}, {algebra.name}) has dimension {n}")
    return Bimodule(algebra, algebra, n, left, right, name=name)


def ext_dual_regular(module: LeftModule) -> LeftModule:
    """Ext^1_Λ(DΛ, M) as a left Λ-module."""
    algebra = module.algebra
    group = ext1(dual_regular(algebra), module)
    actions = [group.contravariant_action(r) for r in _dual_right_actions(algebra)]
    result = LeftModule(algebra, group.dimension, actions, name=f"Ext(D{algebra.name},{module.name})")
    if group.dimension:
        result, _, _ = adapt_module(result)
    return result
