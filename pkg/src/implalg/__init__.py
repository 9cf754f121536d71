"""Finite-model workbench for implication algebras (A, ->, 1)."""

from .core import (
    Claim,
    ClaimStatus,
    ClassDef,
    EvalResult,
    PropertyId,
    PropertySignature,
    Table,
    Witness,
)
from .props import eval_all, eval_bounded_property, eval_property, find_zero

__all__ = [
    "Claim",
    "ClaimStatus",
    "ClassDef",
    "EvalResult",
    "PropertyId",
    "PropertySignature",
    "Table",
    "Witness",
    "eval_all",
    "eval_bounded_property",
    "eval_property",
    "find_zero",
]
