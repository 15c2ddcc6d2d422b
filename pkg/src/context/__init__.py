"""
Per-job computation context.
"""

from src.context.computation_context import ComputationContext

__all__ = ["ComputationContext"]
