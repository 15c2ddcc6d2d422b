"""
Preprojective verifier: graded dimensions of Π(Q, X).
"""

from typing import Any, Dict, List, Tuple

from src.algebra.graded import graded_quotient_dims
from src.algebra.preprojective import preprojective_presentation
from src.config import settings
from src.context.computation_context import ComputationContext
from src.utils.formatters import format_block_dims, format_dims
from src.utils.logger import get_logger
from src.verifiers.base import BaseVerifier, CheckList

logger = get_logger(__name__)


def padded(dims: List[int], n: int) -> List[int]:
    """dims[0..n], filled with zeros past the point where the sequence stopped."""
    return (list(dims) + [0] * (n + 1))[: n + 1]


class PreprojectiveVerifier(BaseVerifier):
    """
    Computes dim Π_n for n up to maxdeg, per degree and per vertex block.

    The relation ρ depends on a choice of orbit representatives and may be
    replaced by its vertex components; both choices must leave the
    dimensions unchanged.
    """

    def __init__(self):
        super().__init__(name="preprojective", description="Graded dimensions of the preprojective algebra")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        ei_quiver, field_, maxdeg = context.ei_quiver, context.field, context.maxdeg
        checks = CheckList()
        quotient = graded_quotient_dims(preprojective_presentation(ei_quiver, field_, maxdeg), maxdeg)
        dim_kc = context.algebras.algebra.dim
        checks.add("degree-zero", quotient.dims[0] == dim_kc, f"dim Π_0 = {quotient.dims[0]}, dim KC = {dim_kc}")

        per_vertex = graded_quotient_dims(preprojective_presentation(ei_quiver, field_, maxdeg, per_vertex=True), maxdeg)
        checks.add(
            "vertex-components",
            padded(per_vertex.dims, maxdeg) == padded(quotient.dims, maxdeg),
            f"(ρ_i): {format_dims(per_vertex.dims)}",
        )

        cap = min(maxdeg, settings.verification.max_tensor_power)
        redrawn = []
        for k in range(settings.verification.orbit_redraws):
            rng = context.rng(f"orbit:{k}")
            other = graded_quotient_dims(preprojective_presentation(ei_quiver, field_, cap, rng=rng), cap)
            redrawn.append(padded(other.dims, cap))
        mismatched = [k for k, dims in enumerate(redrawn) if dims != padded(quotient.dims, cap)]
        checks.add(
            "orbit-representatives",
            not mismatched,
            f"{len(redrawn)} redraws up to degree {cap}" + (f", mismatches at draws {mismatched}" if mismatched else ""),
        )
        for d, blocks in enumerate(quotient.block_dims):
            logger.debug(f"e_i Π_{d} e_j:\n{format_block_dims(blocks)}")
        if not quotient.stabilized:
            logger.info(f"Π(Q,X) did not reach a zero degree by {maxdeg}")

        data = quotient.to_dict()
        data["stabilized"] = quotient.stabilized
        data["dim_KC"] = dim_kc
        data["action_free"] = ei_quiver.is_action_free()
        data["series"] = {"Π(Q,X)": quotient.dims}
        return checks, data
