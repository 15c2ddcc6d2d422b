"""
Job schemas and payload loaders.
"""

from src.interface.loaders import (
    build_cartan,
    build_ei_quiver,
    build_field,
    build_representations,
    load_job,
    read_payload,
)
from src.interface.schemas import (
    CheckRecord,
    Command,
    FieldSpec,
    JobSpec,
    Report,
    ReportStatus,
)

__all__ = [
    "build_cartan",
    "build_ei_quiver",
    "build_field",
    "build_representations",
    "load_job",
    "read_payload",
    "CheckRecord",
    "Command",
    "FieldSpec",
    "JobSpec",
    "Report",
    "ReportStatus",
]
