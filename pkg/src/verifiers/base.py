"""
Base verifier class.

A verifier runs the invariant suite of one statement on a computation
context and never raises: failures become a VerificationResult.
"""

import asyncio
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from src.context.computation_context import ComputationContext
from src.errors import EIPreprojectiveError, HypothesisError, InputError
from src.homology.iso import IsoVerdict
from src.interface.schemas import CheckRecord
from src.utils.logger import get_logger

logger = get_logger(__name__)


class VerificationState(BaseModel):
    """Progress of a verifier on the current job."""

    verifier_name: str
    status: str = "idle"
    checks_run: int = 0
    errors: List[str] = Field(default_factory=list)


class VerificationResult(BaseModel):
    """Outcome of one verifier run."""

    success: bool
    hypothesis_met: bool = True
    input_ok: bool = True
    checks: List[CheckRecord] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None
    verifier_name: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "success": self.success,
            "hypothesis_met": self.hypothesis_met,
            "input_ok": self.input_ok,
            "checks": [c.model_dump() for c in self.checks],
            "data": self.data,
            "error": self.error,
            "verifier_name": self.verifier_name,
        }


class CheckList:
    """Accumulates named checks in the order they are made."""

    def __init__(self):
        self.records: List[CheckRecord] = []

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.records.append(CheckRecord(name=name, passed=bool(passed), detail=detail))
        if not passed:
            logger.warning(f"check {name} failed: {detail}")
        return passed

    def add_verdict(self, name: str, verdict: IsoVerdict) -> bool:
        """Iso checks pass unless they prove non-isomorphism."""
        return self.add(name, verdict is not IsoVerdict.NOT_ISO, verdict.value)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class BaseVerifier(ABC):
    """
    Base class for statement verifiers.

    Args:
        name: Verifier identifier
        description: The statement it checks
    """

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self.state = VerificationState(verifier_name=name)

    @abstractmethod
    async def run(self, context: ComputationContext) -> Tuple[CheckList, Dict[str, Any]]:
        """Run the checks; may raise, ``execute`` converts exceptions."""
        raise NotImplementedError("Subclasses must implement run")

    async def execute(self, context: ComputationContext) -> VerificationResult:
        """
        Run the verifier.

        Args:
            context: The job's computation context

        Returns:
            VerificationResult; a HypothesisError becomes hypothesis_met=False
            and an InputError becomes input_ok=False
        """
        self.state.status = "running"
        logger.info(f"Verifier {self.name} started on {context}")
        try:
            checks, data = await self.run(context)
            self.state.status = "completed"
            self.state.checks_run = len(checks.records)
            logger.info(f"Verifier {self.name} finished: {'pass' if checks.passed else 'fail'}")
            return VerificationResult(
                success=checks.passed,
                checks=checks.records,
                data=data,
                verifier_name=self.name,
            )
        except HypothesisError as e:
            self.state.status = "hypothesis-not-met"
            logger.info(f"Verifier {self.name}: hypothesis not met ({e})")
            return VerificationResult(success=False, hypothesis_met=False, error=str(e), verifier_name=self.name)
        except InputError as e:
            self.state.status = "error"
            self.state.errors.append(str(e))
            logger.error(f"Verifier {self.name} input error: {e}")
            return VerificationResult(success=False, input_ok=False, error=str(e), verifier_name=self.name)
        except (EIPreprojectiveError, ArithmeticError, ValueError) as e:
            self.state.status = "error"
            self.state.errors.append(str(e))
            logger.error(f"Verifier {self.name} error: {e}")
            return VerificationResult(success=False, error=f"{type(e).__name__}: {e}", verifier_name=self.name)

    def execute_sync(self, context: ComputationContext) -> VerificationResult:
        """Synchronous version of execute."""
        return asyncio.run(self.execute(context))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}')"
