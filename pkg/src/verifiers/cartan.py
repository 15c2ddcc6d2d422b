"""
Cartan verifier: Π(Q°, X) of Cartan type against Π(C', D', Ω').
"""

from typing import Any, Dict, Tuple

from src.cartan.comparison import compare_cartan_sides_async
from src.context.computation_context import ComputationContext
from src.errors import InputError
from src.verifiers.base import BaseVerifier, CheckList


class CartanVerifier(BaseVerifier):
    """Runs both sides of the comparison concurrently."""

    def __init__(self):
        super().__init__(name="cartan", description="EI preprojective algebra of Cartan type matches the generalized preprojective algebra")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        if context.triple is None:
            raise InputError("theorem-b needs a Cartan triple payload", path="C")
        report = await compare_cartan_sides_async(context.triple, context.field, context.maxdeg)
        checks = CheckList()
        for name, ok, detail in report.checks:
            checks.add(name, ok, detail)
        data = report.to_dict()
        data["series"] = {
            "Π(Q°,X)": report.category_side.dims.dims,
            "Π(C',D',Ω')": report.cartan_side.dims.dims,
        }
        return checks, data
