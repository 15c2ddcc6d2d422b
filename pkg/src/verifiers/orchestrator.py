"""
Orchestrator: turns a parsed job into a report.

Builds the computation context, routes the command to its verifier and maps
the verifier's result onto a report status.
"""

import asyncio
from typing import Optional

from src.config import settings
from src.context.computation_context import ComputationContext
from src.errors import EIPreprojectiveError, InputError
from src.interface.loaders import build_cartan, build_ei_quiver, build_field, build_representations
from src.interface.schemas import Command, JobSpec, Report, ReportStatus
from src.utils.logger import get_logger, job_context
from src.verifiers.base import VerificationResult
from src.verifiers.router import CommandRouter

logger = get_logger(__name__)


def status_of(result: VerificationResult) -> ReportStatus:
    if not result.input_ok:
        return ReportStatus.INPUT_ERROR
    if not result.hypothesis_met:
        return ReportStatus.HYPOTHESIS_NOT_MET
    return ReportStatus.PASS if result.success else ReportStatus.FAIL


class VerificationOrchestrator:
    """Coordinates context construction and verifier execution."""

    def __init__(self, n_random: Optional[int] = None):
        self.router = CommandRouter()
        self.n_random = n_random
        logger.info("VerificationOrchestrator initialized with all verifiers")

    def build_context(self, job: JobSpec) -> ComputationContext:
        """
        Raises:
            InputError: the payload does not describe a valid acyclic EI quiver or Cartan triple
        """
        field_ = build_field(job.field)
        if job.command is Command.VALIDATE:
            context = ComputationContext(field_, seed=job.seed, maxdeg=job.maxdeg, n_random=self.n_random)
            context.set("job", job)
            return context
        try:
            if job.cartan is not None:
                context = ComputationContext(field_, triple=build_cartan(job.cartan), seed=job.seed, maxdeg=job.maxdeg, n_random=self.n_random)
            else:
                ei_quiver = build_ei_quiver(job.quiver)
                ok, error = ei_quiver.validate()
                if not ok:
                    raise InputError(error, path="arrows")
                if not ei_quiver.quiver.is_acyclic():
                    raise InputError("the quiver has an oriented cycle", path="arrows")
                context = ComputationContext(field_, ei_quiver=ei_quiver, seed=job.seed, maxdeg=job.maxdeg, n_random=self.n_random)
            if job.representations:
                context.add_representations(build_representations(job.representations, context.algebras))
        except InputError:
            raise
        except EIPreprojectiveError as e:
            raise InputError(str(e))
        return context

    def report(self, job: JobSpec, result: Optional[VerificationResult] = None, error: Optional[str] = None) -> Report:
        return Report(
            report_version=settings.report.report_version,
            command=job.command.value,
            field=job.field.to_spec(),
            seed=job.seed,
            status=status_of(result) if result is not None else ReportStatus.INPUT_ERROR,
            checks=result.checks if result is not None else [],
            data=result.data if result is not None else {},
            error=result.error if result is not None else error,
        )

    async def run_job(self, job: JobSpec) -> Report:
        """
        Run one job.

        Args:
            job: The parsed job

        Returns:
            Report; payload problems give status ``input-error``
        """
        with job_context(job.command.value, job.seed):
            try:
                context = self.build_context(job)
            except InputError as e:
                logger.error(f"Input error: {e}")
                return self.report(job, error=str(e))
            verifier = self.router.route(job.command)
            result = await verifier.execute(context)
            logger.info(f"{status_of(result).value} ({len(result.checks)} checks)")
            return self.report(job, result)

    def run_job_sync(self, job: JobSpec) -> Report:
        """Synchronous version of run_job."""
        return asyncio.run(self.run_job(job))
