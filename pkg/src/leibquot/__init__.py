"""Exact-arithmetic quotient constructions for finite-dimensional Leibniz algebras."""

from .fields import GF, QQ, Field, FieldError, PrimeField, RationalField
from .linalg import Subspace, kernel, rref

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "Field",
    "FieldError",
    "PrimeField",
    "RationalField",
    "Subspace",
    "kernel",
    "rref",
    "__version__",
]
