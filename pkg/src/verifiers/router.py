"""
Command router: maps a CLI command to the verifier that runs it.
"""

from typing import Dict, Type

from src.errors import InputError
from src.interface.schemas import Command
from src.utils.logger import get_logger
from src.verifiers.base import BaseVerifier
from src.verifiers.cartan import CartanVerifier
from src.verifiers.local_projectivity import LocalProjectivityVerifier
from src.verifiers.phi_kernel import PhiKernelVerifier
from src.verifiers.preprojective import PreprojectiveVerifier
from src.verifiers.structure import StructureVerifier
from src.verifiers.tensor_algebra import TensorAlgebraVerifier
from src.verifiers.trace_diagram import TraceDiagramVerifier
from src.verifiers.translations import TranslationVerifier

logger = get_logger(__name__)

VERIFIERS: Dict[Command, Type[BaseVerifier]] = {
    Command.VALIDATE: StructureVerifier,
    Command.PREPROJECTIVE: PreprojectiveVerifier,
    Command.THEOREM_A: TensorAlgebraVerifier,
    Command.THEOREM_B: CartanVerifier,
    Command.LOCAL_PROJECTIVITY: LocalProjectivityVerifier,
    Command.TRACE_DIAGRAM: TraceDiagramVerifier,
    Command.TRANSLATIONS: TranslationVerifier,
    Command.PHI_KERNEL: PhiKernelVerifier,
}


class CommandRouter:
    """Holds one verifier instance per command."""

    def __init__(self):
        self.verifiers: Dict[Command, BaseVerifier] = {command: cls() for command, cls in VERIFIERS.items()}

    def route(self, command: Command) -> BaseVerifier:
        """
        Raises:
            InputError: no verifier handles the command
        """
        try:
            verifier = self.verifiers[Command(command)]
        except (KeyError, ValueError):
            raise InputError(f"unknown command '{command}'", path="command")
        logger.debug(f"command {Command(command).value} routed to {verifier}")
        return verifier
