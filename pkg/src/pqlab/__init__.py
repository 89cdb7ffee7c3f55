"""Exact planar experiments with (p,q)-theorems, piercing numbers and clique approximation."""

from .errors import Budget, BudgetExceeded, PreconditionError, VerificationError
from .family import Family
from .geometry import ConvexBody, Point, pt

__all__ = [
    "Budget",
    "BudgetExceeded",
    "ConvexBody",
    "Family",
    "Point",
    "PreconditionError",
    "VerificationError",
    "pt",
]
