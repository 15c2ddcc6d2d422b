"""
Trace diagram verifier: dual bases, the trace pairing, the tensor-Hom
adjunction along each arrow and the commutative square relating Φ and Ψ.
"""

from typing import Any, Dict, Optional, Tuple

from src.context.computation_context import ComputationContext
from src.homology.phi_psi import PhiPsi
from src.homology.representations import Representation, trivial_module
from src.homology.trace import Adjunction, DualBasis, trace_pairing
from src.verifiers.base import BaseVerifier, CheckList


def _first_failure(results) -> Tuple[bool, str]:
    for ok, error in results:
        if not ok:
            return False, error or ""
    return True, ""


class TraceDiagramVerifier(BaseVerifier):
    """Checks the trace constructions on locally projective representations."""

    def __init__(self):
        super().__init__(name="trace-diagram", description="Trace maps make the Φ/Ψ square commute")

    def _pairings(self, rep: Representation) -> Tuple[bool, Optional[str]]:
        algebras, field_ = rep.algebras, rep.field
        for i, module in enumerate(rep.vertex_modules):
            for other in (module, trivial_module(algebras.vertex_algebras[i])):
                if not trace_pairing(other, module).is_bijective(field_):
                    return False, f"t_(M,P) is not bijective at vertex {i + 1} for {other.name}"
        return True, None

    def _adjunctions(self, rep: Representation):
        ei_quiver, algebras = rep.ei_quiver, rep.algebras
        quiver = ei_quiver.quiver
        for a in range(quiver.n_arrows):
            s, t = quiver.source(a), quiver.target(a)
            yield Adjunction(
                ei_quiver.bisets[a],
                algebras.vertex_algebras[t],
                algebras.vertex_algebras[s],
                rep.vertex_modules[s],
                rep.vertex_modules[t],
            ).check_inverse()

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        context.require_action_free()
        checks = CheckList()
        suite = context.module_suite(locally_projective=True)
        for rep in suite:
            ok, detail = _first_failure(DualBasis(m).check() for m in rep.vertex_modules)
            checks.add(f"{rep.name}:dual-basis", ok, detail)
            ok, detail = _first_failure([self._pairings(rep)])
            checks.add(f"{rep.name}:trace-pairing", ok, detail)
            ok, detail = _first_failure(self._adjunctions(rep))
            checks.add(f"{rep.name}:adjunction", ok, detail)
            ok, error = PhiPsi(rep).check_diagram()
            checks.add(f"{rep.name}:diagram", ok, error or "")
        return checks, {"modules": [{"name": r.name, "dims": r.dimension_vector()} for r in suite]}
