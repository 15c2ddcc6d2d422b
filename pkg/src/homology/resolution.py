"""
Two-term projective presentations.

The standard resolution of a locally projective representation M is

    0 -> ⊕_α KC e_t (x) KX(α) (x) M_s --d--> ⊕_i KC e_i (x) M_i --μ--> M -> 0

built here as KC (x)_A V (x)_A M and KC (x)_A M with A the product of the
vertex group algebras. The minimal presentation comes from projective covers.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.algebra.bimodule import TensorProduct, regular_bimodule, restrict_bimodule, tensor_over_algebra
from src.algebra.modules import LeftModule, compose, is_module_map, map_rank, restrict_module
from src.algebra.preprojective import arrow_bimodule
from src.errors import HypothesisError, ModuleError
from src.homology.covers import projective_cover
from src.homology.functors import module_as_bimodule
from src.homology.representations import Representation, is_locally_projective, rep_to_module
from src.scalars.linalg import Matrix, is_zero_matrix, transpose, vec_sub
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class TwoTermResolution:
    """
    P1 --d--> P0 --μ--> M -> 0.

    A projective presentation; it is a resolution when ``check_exactness`` passes.
    """

    module: LeftModule
    p1: LeftModule
    p0: LeftModule
    d: Matrix
    mu: Matrix

    def check_exactness(self) -> Tuple[bool, Optional[str]]:
        """d and μ are module maps, μ d = 0, d injective, μ surjective and dim P0 = dim P1 + dim M."""
        field = self.module.field
        m, p0, p1 = self.module.dim, self.p0.dim, self.p1.dim
        if not is_module_map(self.d, self.p1, self.p0):
            return False, "d is not a module map"
        if not is_module_map(self.mu, self.p0, self.module):
            return False, "μ is not a module map"
        if not is_zero_matrix(field, compose(field, self.mu, self.d, p0, p1)):
            return False, "μ ∘ d is not zero"
        if map_rank(field, self.d, p1) != p1:
            return False, f"d has rank {map_rank(field, self.d, p1)} < dim P1 = {p1}"
        if map_rank(field, self.mu, p0) != m:
            return False, f"μ has rank {map_rank(field, self.mu, p0)} < dim M = {m}"
        if p0 != p1 + m:
            return False, f"dim P0 = {p0} but dim P1 + dim M = {p1 + m}"
        return True, None


def standard_resolution(rep: Representation) -> TwoTermResolution:
    """
    The standard resolution of a locally projective representation.

    Raises:
        HypothesisError: X is not action-free
        ModuleError: M is not locally projective
    """
    algebras = rep.algebras
    if not algebras.ei_quiver.is_action_free():
        raise HypothesisError("the standard resolution needs an action-free EI quiver")
    if not is_locally_projective(rep):
        raise ModuleError(f"{rep.name} is not locally projective")

    field, kc, category = algebras.field, algebras.algebra, algebras.category
    vertex_algebra, inclusion = algebras.vertex_product
    images = [{k: field.one} for k in inclusion]
    module = rep_to_module(rep)

    kc_a = restrict_bimodule(regular_bimodule(kc), right=(vertex_algebra, images), name="KC")
    arrows = list(range(algebras.ei_quiver.quiver.n_arrows))
    v, v_basis = arrow_bimodule(category, vertex_algebra, inclusion, arrows)
    m_a = module_as_bimodule(restrict_module(module, vertex_algebra, images))

    zeroth: TensorProduct = tensor_over_algebra(kc_a, m_a, name="P0")
    middle: TensorProduct = tensor_over_algebra(kc_a, v, name="KC⊗V")
    first: TensorProduct = tensor_over_algebra(middle.bimodule, m_a, name="P1")
    p0, p1 = zeroth.bimodule.left_module(), first.bimodule.left_module()

    def unit(n: int, k: int):
        out = [field.zero] * n
        out[k] = field.one
        return out

    mu_columns = [module.act(p, unit(module.dim, m)) for p, m in zeroth.pairs]
    mu = transpose(mu_columns, module.dim) if mu_columns else [[] for _ in range(module.dim)]

    middle_pairs = middle.pairs
    d_columns = []
    for u, m in first.pairs:
        p, w = middle_pairs[u]
        a, x = v_basis[w]
        arrow = algebras.arrow_element(a, x)
        acted = module.act(arrow, unit(module.dim, m))
        pv = category.compose(p, arrow)
        left = zeroth.tensor(unit(kc.dim, p), acted)
        right = zeroth.pure(pv, m) if pv is not None else [field.zero] * p0.dim
        d_columns.append(vec_sub(field, left, right))
    d = transpose(d_columns, p0.dim) if d_columns else [[] for _ in range(p0.dim)]

    logger.debug(f"standard resolution of {rep.name}: dim P1 = {p1.dim}, dim P0 = {p0.dim}, dim M = {module.dim}")
    return TwoTermResolution(module, p1, p0, d, mu)


def minimal_presentation(module: LeftModule) -> TwoTermResolution:
    """P(Ω M) -> P(M) -> M from two projective covers."""
    field = module.field
    top = projective_cover(module)
    syzygy = projective_cover(top.kernel)
    d = compose(field, top.kernel_inclusion, syzygy.cover_map, top.kernel.dim, syzygy.cover.dim)
    return TwoTermResolution(module, syzygy.cover, top.cover, d, top.cover_map)
