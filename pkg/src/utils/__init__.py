"""
Utilities module for the EI preprojective toolkit.
"""

from src.utils.logger import get_logger, job_context, setup_logging
from src.utils.formatters import (
    format_block_dims,
    format_dimension_vector,
    format_dims,
    format_report_csv,
    format_report_json,
    format_status_line,
)
from src.utils.validators import validate_field_spec, validate_group_table, validate_prime

__all__ = [
    "get_logger",
    "job_context",
    "setup_logging",
    "format_block_dims",
    "format_dimension_vector",
    "format_dims",
    "format_report_csv",
    "format_report_json",
    "format_status_line",
    "validate_field_spec",
    "validate_group_table",
    "validate_prime",
]
