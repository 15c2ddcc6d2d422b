"""
Exception hierarchy for the EI preprojective toolkit.
"""

from typing import Optional


class EIPreprojectiveError(Exception):
    """Base class for every error raised by the toolkit."""


class FieldError(EIPreprojectiveError):
    """Invalid field parameters or illegal field arithmetic."""


class GroupError(EIPreprojectiveError):
    """Group table or homomorphism violates the group axioms."""


class BisetError(EIPreprojectiveError):
    """Biset action tables are inconsistent or groups do not match."""


class QuiverError(EIPreprojectiveError):
    """Malformed quiver, path or EI quiver data."""


class AlgebraError(EIPreprojectiveError):
    """Algebra, bimodule or presentation data is inconsistent."""


class InfiniteGradedPieceError(AlgebraError):
    """A graded piece of a path algebra grows past the configured path length cap."""


class ModuleError(EIPreprojectiveError):
    """Module data is inconsistent or lacks a required property."""


class HypothesisError(EIPreprojectiveError):
    """A statement's hypothesis does not hold for the given input."""


class CartanError(EIPreprojectiveError):
    """A Cartan triple violates one of its defining conditions."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"({condition}) {message}")


class InputError(EIPreprojectiveError):
    """Job payload could not be parsed or validated."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
