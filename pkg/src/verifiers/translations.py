"""
Translation verifier: every route to τ and to τ⁻ gives the same module.
"""

from typing import Any, Dict, List, Tuple

from src.context.computation_context import ComputationContext
from src.homology.iso import module_iso_check
from src.homology.representations import rep_to_module
from src.homology.translations import (
    tau_hom,
    tau_inverse_ext,
    tau_inverse_minimal,
    tau_inverse_tensor,
    tau_minimal,
    tau_standard,
)
from src.utils.logger import get_logger
from src.verifiers.base import BaseVerifier, CheckList

logger = get_logger(__name__)


class TranslationVerifier(BaseVerifier):
    """
    τM = D Tr M = Ker ν(d) = Hom(Π_1, M) and
    τ⁻M = Tr D M = Π_1 (x) M = Ext^1(DΛ, M) on locally projective M.
    """

    def __init__(self):
        super().__init__(name="translations", description="Auslander-Reiten translations through Π_1")

    def _compare(self, checks: CheckList, context: ComputationContext, label: str, routes: Dict[str, Any]) -> Dict[str, List[int]]:
        vectors = {name: module.dimension_vector() for name, module in routes.items()}
        names = list(routes)
        reference = names[0]
        agree = all(vectors[n] == vectors[reference] for n in names)
        if not agree:
            logger.warning(f"{label}: routes disagree {vectors}")
        checks.add(f"{label}-dims", agree, ", ".join(f"{n}={vectors[n]}" for n in names))
        for name in names[1:]:
            verdict = module_iso_check(routes[reference], routes[name], rng=context.rng(f"{label}:{name}"))
            checks.add_verdict(f"{label}:{reference}≅{name}", verdict)
        return vectors

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        context.require_action_free()
        checks = CheckList()
        rows = []
        for rep in context.module_suite(locally_projective=True):
            module = rep_to_module(rep)
            tau = self._compare(checks, context, f"{rep.name}:τ", {
                "hom": tau_hom(rep),
                "minimal": tau_minimal(module),
                "standard": tau_standard(rep),
            })
            tau_inverse = self._compare(checks, context, f"{rep.name}:τ⁻", {
                "tensor": tau_inverse_tensor(module, rep),
                "minimal": tau_inverse_minimal(module),
                "ext": tau_inverse_ext(module),
            })
            rows.append({"name": rep.name, "dims": rep.dimension_vector(), "tau": tau["hom"], "tau_inverse": tau_inverse["tensor"]})
        return checks, {"modules": rows}
