"""Cyclic proofs for first-order logic with reflexive-transitive closure."""

from ._core import (
    BudgetExceeded,
    RtcError,
    check,
    normalize_formula,
    normalize_sequent,
    prove,
    refute,
    render,
    translate_beta,
    translate_induction,
)

__all__ = [
    "BudgetExceeded",
    "RtcError",
    "check",
    "normalize_formula",
    "normalize_sequent",
    "prove",
    "refute",
    "render",
    "translate_beta",
    "translate_induction",
]
