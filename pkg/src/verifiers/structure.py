"""
Structure verifier: the validate command.

Checks the axioms of the payload without computing any algebra beyond KC
for the representations.
"""

from typing import Any, Dict, Tuple

from src.cartan.triple import cartan_violations
from src.context.computation_context import ComputationContext
from src.errors import EIPreprojectiveError, InputError
from src.homology.representations import is_locally_projective, quiver_algebras
from src.interface.loaders import build_ei_quiver, build_representations
from src.interface.schemas import JobSpec
from src.utils.logger import get_logger
from src.verifiers.base import BaseVerifier, CheckList

logger = get_logger(__name__)

CARTAN_CONDITIONS = ("shape", "symmetrizer", "C1", "C2", "C3", "O1", "O2")


class StructureVerifier(BaseVerifier):
    """Validates an EI quiver or Cartan triple payload."""

    def __init__(self):
        super().__init__(name="structure", description="Payload satisfies the defining axioms")

    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        job: JobSpec = context.get("job")
        if job is None:
            raise InputError("validate needs the parsed job")
        checks = CheckList()
        data: Dict[str, Any] = {}
        if job.cartan is not None:
            spec = job.cartan
            violations = cartan_violations(spec.C, spec.D, [(i - 1, j - 1) for i, j in spec.Omega])
            for condition in CARTAN_CONDITIONS:
                found = [msg for name, msg in violations if name == condition]
                checks.add(condition, not found, "; ".join(found))
            data["kind"] = "cartan"
        else:
            data["kind"] = "quiver"
            self._check_quiver(job, context, checks, data)
        data["valid"] = checks.passed
        return checks, data

    def _check_quiver(self, job: JobSpec, context: ComputationContext, checks: CheckList, data: Dict[str, Any]) -> None:
        try:
            ei_quiver = build_ei_quiver(job.quiver)
        except EIPreprojectiveError as e:
            checks.add("axioms", False, str(e))
            return
        ok, error = ei_quiver.validate()
        checks.add("axioms", ok, error or "")
        checks.add("acyclic", ei_quiver.quiver.is_acyclic(), "")
        data["action_free"] = ei_quiver.is_action_free()
        data["vertices"] = ei_quiver.quiver.n_vertices
        data["arrows"] = ei_quiver.quiver.n_arrows
        if not (ok and job.representations):
            return
        algebras = quiver_algebras(ei_quiver, context.field)
        data["dim_KC"] = algebras.algebra.dim
        for spec in job.representations:
            try:
                rep = build_representations([spec], algebras)[0]
            except EIPreprojectiveError as e:
                checks.add(f"representation:{spec.name}", False, str(e))
                continue
            checks.add(f"representation:{spec.name}", True, f"locally projective: {is_locally_projective(rep)}")
