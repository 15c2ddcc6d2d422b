"""
Φ kernel verifier: Ker Φ ≅ Hom(Π_1, M).
"""

from typing import Any, Dict, Tuple

from src.context.computation_context import ComputationContext
from src.homology.iso import module_iso_check
from src.homology.phi_psi import phi_map
from src.homology.translations import tau_hom
from src.verifiers.base import BaseVerifier, CheckList


class PhiKernelVerifier(BaseVerifier):

    def __init__(self):
        super().__init__(name="phi-kernel", description="Kernel of Φ is Hom(Π_1, M)")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        context.require_action_free()
        checks = CheckList()
        rows = []
        for rep in context.module_suite(locally_projective=True):
            phi = phi_map(rep)
            hom = tau_hom(rep)
            checks.add(f"{rep.name}:dim", phi.kernel.dim == hom.dim, f"dim Ker Φ = {phi.kernel.dim}, dim Hom(Π1,M) = {hom.dim}")
            checks.add_verdict(f"{rep.name}:iso", module_iso_check(phi.kernel, hom, rng=context.rng(f"phi:{rep.name}")))
            rows.append({
                "name": rep.name,
                "dims": rep.dimension_vector(),
                "source": phi.source.dim,
                "target": phi.target.dim,
                "rank": phi.rank,
                "kernel": phi.kernel.dimension_vector(),
            })
        return checks, {"modules": rows}
