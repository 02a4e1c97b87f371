"""Exact engine for excludant partition statistics."""

from ._core import (
    BudgetExceeded,
    asym,
    check_bijection,
    phi,
    phi_inverse,
    precision_digits,
    sequence,
    statistics,
    theorems,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "asym",
    "check_bijection",
    "phi",
    "phi_inverse",
    "precision_digits",
    "sequence",
    "statistics",
    "theorems",
    "verify",
]
