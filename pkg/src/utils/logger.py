"""
Logging for the EI preprojective toolkit.

Everything goes to stderr; stdout carries only the report. Records emitted
while a job runs carry its command and seed in ``extra["job"]``.
"""

import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional

from loguru import logger

from src.config import settings

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<magenta>{extra[job]}</magenta> | <cyan>{extra[name]}</cyan> | <level>{message}</level>"
)

# Libraries that log through the stdlib and are noisy below WARNING.
QUIET_LOGGERS = ("numpy", "sympy", "asyncio")


class InterceptHandler(logging.Handler):
    """Forward stdlib logging records to loguru, keeping the caller's frame."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).bind(name=record.name).log(level, record.getMessage())


def setup_logging(log_level: Optional[str] = None) -> None:
    """
    Install the stderr sink and, with LOG_TO_FILE, a JSON-lines file sink.

    Args:
        log_level: Overrides ``settings.log_level``
    """
    level = (log_level or settings.log_level).upper()

    logger.remove()
    logger.configure(extra={"job": "-", "name": "ei-preprojective"})
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level, colorize=None, backtrace=settings.debug)

    if settings.log_to_file:
        settings.logs_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(settings.logs_dir / "ei_preprojective_{time}.jsonl"),
            level="DEBUG",
            serialize=True,
            rotation="10 MB",
            retention=5,
        )

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


@contextmanager
def job_context(command: str, seed: int) -> Iterator[None]:
    """Tag every record logged inside the block, across awaits, with the job."""
    with logger.contextualize(job=f"{command}#{seed}"):
        yield


def get_logger(name: str) -> "logger":
    return logger.bind(name=name)


setup_logging()
