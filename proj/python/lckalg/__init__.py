"""Exact toolkit for locally conformally Kähler Lie algebras."""

from ._core import (
    Algebra,
    DimensionMismatch,
    DomainError,
    InfeasibleSystem,
    InvariantViolation,
    LckError,
    ParseError,
    Triple,
    counterexample,
    d4,
    dim,
    gb,
    search,
    verify,
)

__all__ = [
    "Algebra",
    "DimensionMismatch",
    "DomainError",
    "InfeasibleSystem",
    "InvariantViolation",
    "LckError",
    "ParseError",
    "Triple",
    "counterexample",
    "d4",
    "dim",
    "gb",
    "search",
    "verify",
]
