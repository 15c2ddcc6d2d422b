"""
Verifiers: one per checked statement, plus the router and orchestrator.
"""

from src.verifiers.base import BaseVerifier, CheckList, VerificationResult, VerificationState
from src.verifiers.cartan import CartanVerifier
from src.verifiers.local_projectivity import LocalProjectivityVerifier
from src.verifiers.orchestrator import VerificationOrchestrator, status_of
from src.verifiers.phi_kernel import PhiKernelVerifier
from src.verifiers.preprojective import PreprojectiveVerifier, padded
from src.verifiers.router import VERIFIERS, CommandRouter
from src.verifiers.structure import StructureVerifier
from src.verifiers.tensor_algebra import TensorAlgebraVerifier
from src.verifiers.trace_diagram import TraceDiagramVerifier
from src.verifiers.translations import TranslationVerifier

__all__ = [
    "BaseVerifier",
    "CheckList",
    "VerificationResult",
    "VerificationState",
    "CartanVerifier",
    "LocalProjectivityVerifier",
    "VerificationOrchestrator",
    "status_of",
    "PhiKernelVerifier",
    "PreprojectiveVerifier",
    "padded",
    "VERIFIERS",
    "CommandRouter",
    "StructureVerifier",
    "TensorAlgebraVerifier",
    "TraceDiagramVerifier",
    "TranslationVerifier",
]
