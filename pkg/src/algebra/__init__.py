"""
Algebras, modules, bimodules and graded quotients.
"""

from src.algebra.algebra import Algebra, category_algebra, field_algebra, group_algebra, vertex_group_algebra
from src.algebra.bimodule import (
    Bimodule,
    TensorProduct,
    biset_bimodule,
    bimodule_hom_space,
    quotient_bimodule,
    regular_bimodule,
    restrict_bimodule,
    tensor_over_algebra,
    tensor_power,
    tensor_power_dims,
)
from src.algebra.graded import (
    CategoryAmbient,
    GradedAlgebraPresentation,
    GradedQuotient,
    MonomialAmbient,
    PathAmbient,
    graded_quotient_dims,
    path_algebra_quotient,
)
from src.algebra.modules import (
    LeftModule,
    cokernel,
    direct_sum,
    dual_module,
    hom_space,
    kernel,
    make_module,
    projective_module,
    quotient_module,
    regular_module,
    submodule,
)
from src.algebra.preprojective import (
    arrow_bimodule,
    pi_one_bimodule,
    preprojective_presentation,
    rho_components,
    rho_element,
    tensor_algebra_check,
)

__all__ = [
    "Algebra",
    "category_algebra",
    "field_algebra",
    "group_algebra",
    "vertex_group_algebra",
    "Bimodule",
    "TensorProduct",
    "biset_bimodule",
    "bimodule_hom_space",
    "quotient_bimodule",
    "regular_bimodule",
    "restrict_bimodule",
    "tensor_over_algebra",
    "tensor_power",
    "tensor_power_dims",
    "CategoryAmbient",
    "GradedAlgebraPresentation",
    "GradedQuotient",
    "MonomialAmbient",
    "PathAmbient",
    "graded_quotient_dims",
    "path_algebra_quotient",
    "LeftModule",
    "cokernel",
    "direct_sum",
    "dual_module",
    "hom_space",
    "kernel",
    "make_module",
    "projective_module",
    "quotient_module",
    "regular_module",
    "submodule",
    "arrow_bimodule",
    "pi_one_bimodule",
    "preprojective_presentation",
    "rho_components",
    "rho_element",
    "tensor_algebra_check",
]
