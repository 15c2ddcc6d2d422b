"""
Main entry point for the EI preprojective toolkit.

    python -m src.main --input data/inputs/b2_cartan.json --command theorem-b
"""

import argparse
import os
import sys
import tempfile
from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger

from src.config import settings
from src.errors import InputError
from src.interface.loaders import load_job
from src.interface.schemas import Command, Report, ReportStatus
from src.utils.formatters import format_report_csv, format_report_json, format_status_line
from src.utils.logger import setup_logging
from src.verifiers.orchestrator import VerificationOrchestrator

EXIT_CODES: Dict[ReportStatus, int] = {
    ReportStatus.PASS: 0,
    ReportStatus.FAIL: 1,
    ReportStatus.HYPOTHESIS_NOT_MET: 2,
    ReportStatus.INPUT_ERROR: 3,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ei-preprojective",
        description="Preprojective algebras of finite EI quivers: constructions and verification",
    )
    parser.add_argument("--input", required=True, help="JSON payload: an EI quiver or a Cartan triple")
    parser.add_argument("--command", required=True, choices=[c.value for c in Command])
    parser.add_argument("--field", default=None, help='field spec as JSON, e.g. {"kind":"prime","p":2}')
    parser.add_argument("--maxdeg", type=int, default=None, help="star-degree cap")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    parser.add_argument("--out", default=None, help="report path; .csv writes the CSV view")
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    return parser


def input_error_report(command: str, error: InputError) -> Report:
    return Report(
        report_version=settings.report.report_version,
        command=command,
        status=ReportStatus.INPUT_ERROR,
        error=str(error),
    )


def render(report: Report, out: Optional[str]) -> str:
    payload = report.model_dump(mode="json")
    if out and out.lower().endswith(".csv"):
        return format_report_csv(payload)
    return format_report_json(payload)


def write_atomic(path: str, text: str) -> None:
    """Write through a temporary file in the target directory and rename it into place."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(argv: Optional[List[str]] = None) -> int:
    """Run one job and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)

    try:
        job = load_job(Path(args.input), args.command, field=args.field, maxdeg=args.maxdeg, seed=args.seed, out=args.out)
    except InputError as e:
        logger.error(f"Input error: {e}")
        report = input_error_report(args.command, e)
    else:
        report = VerificationOrchestrator().run_job_sync(job)

    text = render(report, args.out)
    if args.out:
        try:
            write_atomic(args.out, text)
        except OSError as e:
            logger.error(f"cannot write {args.out}: {e.strerror}")
            return EXIT_CODES[ReportStatus.INPUT_ERROR]
        logger.info(f"Report written to {args.out}")
    else:
        sys.stdout.write(text)
    logger.info(format_status_line(report.model_dump(mode="json")))
    return EXIT_CODES[ReportStatus(report.status)]


def main():
    """Main application entry point."""
    logger.info(f"EI Preprojective v{getattr(sys.modules['src'], '__version__', '1.0.0')}")
    sys.exit(run())


if __name__ == "__main__":
    main()
