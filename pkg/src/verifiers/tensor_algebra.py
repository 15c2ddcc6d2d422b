"""
Tensor algebra verifier: Π(Q, X) against tensor powers of Π_1 and of
E = Ext^1(DKC, KC).
"""

from typing import Any, Dict, Tuple

from src.algebra.bimodule import tensor_power_dims
from src.algebra.graded import graded_quotient_dims
from src.algebra.preprojective import preprojective_presentation, tensor_algebra_check
from src.config import settings
from src.context.computation_context import ComputationContext
from src.homology.ext import ext_bimodule
from src.homology.iso import bimodule_iso_check
from src.utils.formatters import format_dims
from src.utils.logger import get_logger
from src.verifiers.base import BaseVerifier, CheckList
from src.verifiers.preprojective import padded

logger = get_logger(__name__)


class TensorAlgebraVerifier(BaseVerifier):
    """For action-free X: Π(Q, X) ≅ T_KC(Π_1) and Π_1 ≅ E as bimodules."""

    def __init__(self):
        super().__init__(name="tensor-algebra", description="Preprojective algebra is the tensor algebra of Ext^1(DKC, KC)")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        context.require_action_free()
        algebras = context.algebras
        checks = CheckList()

        ok, error = tensor_algebra_check(algebras.category, context.field)
        checks.add("KC-tensor-algebra", ok, error or "KC ≅ T_A(⊕ KX(α))")

        pi_one = algebras.pi_one
        ext = ext_bimodule(algebras.algebra)
        checks.add("dim-E-vs-Π1", ext.dim == pi_one.dim, f"dim E = {ext.dim}, dim Π1 = {pi_one.dim}")
        checks.add("blocks-E-vs-Π1", ext.block_dims() == pi_one.block_dims(), f"{ext.block_dims()} vs {pi_one.block_dims()}")
        checks.add_verdict("E≅Π1", bimodule_iso_check(ext, pi_one, rng=context.rng("bimodule-iso")))

        cap = min(context.maxdeg, settings.verification.max_tensor_power)
        quotient = graded_quotient_dims(preprojective_presentation(context.ei_quiver, context.field, cap), cap)
        pi_dims = padded(quotient.dims, cap)
        checks.add("Π0-vs-KC", pi_dims[0] == algebras.algebra.dim, f"dim Π_0 = {pi_dims[0]}")
        series = {
            "Π(Q,X)": pi_dims,
            "Π1^n": tensor_power_dims(pi_one, cap),
            "E^n": tensor_power_dims(ext, cap),
        }
        checks.add("Πn-vs-Π1^n", pi_dims == series["Π1^n"], f"{format_dims(pi_dims)} vs {format_dims(series['Π1^n'])}")
        checks.add("Πn-vs-E^n", pi_dims == series["E^n"], f"{format_dims(pi_dims)} vs {format_dims(series['E^n'])}")

        data = {
            "dim_KC": algebras.algebra.dim,
            "dim_E": ext.dim,
            "dim_Π1": pi_one.dim,
            "block_dims_Π1": pi_one.block_dims(),
            "degree_cap": cap,
            "series": series,
        }
        return checks, data
