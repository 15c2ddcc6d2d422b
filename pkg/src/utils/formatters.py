"""
Formatting utilities for reports and dimension sequences.
"""

import csv
import io
import json
from typing import Any, Dict, List, Sequence

from src.config import settings


def format_dims(dims: Sequence[int]) -> str:
    """
    Format a dimension sequence.

    Args:
        dims: dim Π_0, dim Π_1, ...

    Returns:
        e.g. "(3, 2, 1 | 6)" with the total after the bar
    """
    return f"({', '.join(str(d) for d in dims)} | {sum(dims)})"


def format_dimension_vector(vector: Sequence[int]) -> str:
    return "[" + " ".join(str(d) for d in vector) + "]"


def format_block_dims(blocks: Sequence[Sequence[int]]) -> str:
    """One row per target vertex: e_i Λ e_j for j left to right."""
    return "\n".join(" ".join(f"{d:>3}" for d in row) for row in blocks)


def format_report_json(report: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, configured indent, trailing newline."""
    return json.dumps(report, indent=settings.report.indent, sort_keys=True, ensure_ascii=False) + "\n"


def format_report_csv(report: Dict[str, Any]) -> str:
    """
    CSV view of a report.

    Dimension series become one column each, indexed by degree; a report
    without series is written as its check table.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    series: Dict[str, List[int]] = report.get("data", {}).get("series") or {}
    if series:
        names = sorted(series)
        writer.writerow(["degree"] + names)
        length = max(len(series[n]) for n in names)
        for d in range(length):
            writer.writerow([d] + [series[n][d] if d < len(series[n]) else "" for n in names])
    else:
        writer.writerow(["check", "passed", "detail"])
        for check in report.get("checks", []):
            writer.writerow([check["name"], str(check["passed"]).lower(), check["detail"]])
    return buffer.getvalue()


def format_status_line(report: Dict[str, Any]) -> str:
    """One line for stderr: command, status and the failed checks."""
    failed = [c["name"] for c in report.get("checks", []) if not c["passed"]]
    line = f"{report['command']}: {report['status']}"
    if failed:
        line += f" (failed: {', '.join(failed)})"
    if report.get("error"):
        line += f" [{report['error']}]"
    return line
