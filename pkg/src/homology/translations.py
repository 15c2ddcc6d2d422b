"""
Auslander-Reiten translations.

τ is computed as D Tr M from a minimal presentation, as Ker ν(d) from the
standard resolution, or as Hom(Π_1, M). τ⁻ is computed as Π_1 (x) M, as
Tr D M, or as Ext^1(DΛ, M). All routes return modules over the same algebra
object so that they can be compared directly.
"""

from enum import Enum

from src.algebra.modules import LeftModule, cokernel, dual_module, kernel
from src.errors import ModuleError
from src.homology.ext import ext_dual_regular
from src.homology.functors import (
    hom_from_bimodule,
    hom_to_regular,
    nakayama,
    nakayama_map,
    precompose_map,
    tensor_module,
)
from src.homology.representations import Representation, is_locally_projective, module_to_rep, rep_to_module
from src.homology.resolution import TwoTermResolution, minimal_presentation, standard_resolution
from src.utils.logger import get_logger

logger = get_logger(__name__)


class TauRoute(str, Enum):
    """How τ is computed."""

    STANDARD = "standard"
    MINIMAL = "minimal"


def transpose_module(presentation: TwoTermResolution) -> LeftModule:
    """Tr M = Coker Hom(d, A), a module over A^op."""
    p1, p0 = presentation.p1, presentation.p0
    hom_p1, hom_p0 = hom_to_regular(p1), hom_to_regular(p0)
    pulled = precompose_map(presentation.d, p1, p0, hom_p1, hom_p0)
    module, _ = cokernel(pulled, hom_p0.module, hom_p1.module, name=f"Tr{presentation.module.name}")
    return module


def tau_minimal(module: LeftModule) -> LeftModule:
    """τM = D Tr M from the minimal presentation."""
    result = dual_module(transpose_module(minimal_presentation(module)))
    result.name = f"τ{module.name}"
    return result


def tau_standard(rep: Representation) -> LeftModule:
    """
    τM = Ker ν(d) for the standard resolution.

    Raises:
        HypothesisError: X is not action-free
        ModuleError: M is not locally projective
    """
    resolution = standard_resolution(rep)
    p1, p0 = resolution.p1, resolution.p0
    nu_d = nakayama_map(resolution.d, p1, p0)
    result, _ = kernel(nu_d, nakayama(p1), nakayama(p0), name=f"τ{rep.name}")
    return result


def tau_hom(rep: Representation) -> LeftModule:
    """τM = Hom(Π_1, M)."""
    hom = hom_from_bimodule(rep.algebras.pi_one, rep_to_module(rep))
    hom.module.name = f"Hom(Π1,{rep.name})"
    return hom.module


def tau_inverse_tensor(module: LeftModule, rep: Representation) -> LeftModule:
    """τ⁻M = Π_1 (x) M."""
    result = tensor_module(rep.algebras.pi_one, module).bimodule.left_module()
    result.name = f"Π1⊗{rep.name}"
    return result


def tau_inverse_minimal(module: LeftModule) -> LeftModule:
    """τ⁻M = Tr D M; the presentation of DM is taken over the opposite algebra."""
    result = transpose_module(minimal_presentation(dual_module(module)))
    result.name = f"τ⁻{module.name}"
    return result


def tau_inverse_ext(module: LeftModule) -> LeftModule:
    """τ⁻M = Ext^1(DΛ, M)."""
    return ext_dual_regular(module)


def ar_translate(rep: Representation, route: TauRoute = TauRoute.MINIMAL) -> Representation:
    """
    τ(M) as a representation.

    Args:
        rep: The representation M
        route: ``standard`` needs M locally projective and X action-free

    Raises:
        HypothesisError: standard route on a quiver that is not action-free
        ModuleError: standard route on a module that is not locally projective
    """
    route = TauRoute(route)
    if route is TauRoute.STANDARD:
        module = tau_standard(rep)
    else:
        module = tau_minimal(rep_to_module(rep))
    logger.debug(f"τ({rep.name}) by the {route.value} route has dimension vector {module.dimension_vector()}")
    return module_to_rep(module, rep.algebras, name=f"τ{rep.name}")


def ar_translate_inverse(rep: Representation) -> Representation:
    """
    τ⁻(M) = Π_1 (x) M as a representation.

    Raises:
        ModuleError: M is not locally projective
    """
    if not is_locally_projective(rep):
        raise ModuleError(f"{rep.name} is not locally projective")
    module = tau_inverse_tensor(rep_to_module(rep), rep)
    return module_to_rep(module, rep.algebras, name=f"τ⁻{rep.name}")
