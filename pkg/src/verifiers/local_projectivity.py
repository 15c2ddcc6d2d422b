"""
Local projectivity verifier.

A representation is locally projective iff its projective dimension is at
most one iff its injective dimension is at most one; locally projective
modules have an exact standard resolution.
"""

from typing import Any, Dict, List, Tuple

from src.context.computation_context import ComputationContext
from src.homology.covers import injective_dimension_at_most_one, projective_dimension_at_most_one
from src.homology.representations import is_locally_projective, rep_to_module
from src.homology.resolution import standard_resolution
from src.verifiers.base import BaseVerifier, CheckList


class LocalProjectivityVerifier(BaseVerifier):
    """Runs on a mixed suite of locally projective and other modules."""

    def __init__(self):
        super().__init__(name="local-projectivity", description="Locally projective iff pd <= 1 iff id <= 1")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        context.require_action_free()
        checks = CheckList()
        rows: List[Dict[str, Any]] = []
        for rep in context.module_suite(locally_projective=False):
            module = rep_to_module(rep)
            lp = is_locally_projective(rep)
            pd = projective_dimension_at_most_one(module)
            injective = injective_dimension_at_most_one(module)
            checks.add(f"{rep.name}:equivalence", lp == pd == injective, f"lp={lp} pd<=1={pd} id<=1={injective}")
            if lp:
                ok, error = standard_resolution(rep).check_exactness()
                checks.add(f"{rep.name}:standard-resolution", ok, error or "")
            rows.append({"name": rep.name, "dims": rep.dimension_vector(), "locally_projective": lp})
        data = {
            "modules": rows,
            "locally_projective": sum(1 for r in rows if r["locally_projective"]),
            "total": len(rows),
        }
        return checks, data
