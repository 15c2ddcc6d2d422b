"""
Exact scalars: fields, F_p polynomials and linear algebra.
"""

from src.scalars.fields import (
    CyclotomicField,
    ExtensionField,
    FieldDescriptor,
    FieldElement,
    PrimeField,
    RationalField,
    enough_roots_of_unity,
    make_field,
    splits_completely,
)
from src.scalars.linalg import EchelonBasis, Subspace

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "PrimeField",
    "ExtensionField",
    "RationalField",
    "CyclotomicField",
    "make_field",
    "splits_completely",
    "enough_roots_of_unity",
    "Subspace",
    "EchelonBasis",
]
