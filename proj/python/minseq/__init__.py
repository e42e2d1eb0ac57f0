"""Workbench for one-sided sequent calculi of classical propositional logic.

The heavy lifting lives in the compiled extension ``minseq._core``; this
package re-exports its public surface.
"""

from ._core import (
    Derivation,
    Formula,
    Sequent,
    System,
    census_text,
    check,
    closure_rules,
    contains,
    degree_text,
    elaborate,
    is_minimal,
    is_valid,
    minimize,
    parse_derivation,
    parse_formula,
    parse_sequent,
    parse_system,
    preset,
    prove,
    search,
)

__all__ = [
    "Derivation",
    "Formula",
    "Sequent",
    "System",
    "census_text",
    "check",
    "closure_rules",
    "contains",
    "degree_text",
    "elaborate",
    "is_minimal",
    "is_valid",
    "minimize",
    "parse_derivation",
    "parse_formula",
    "parse_sequent",
    "parse_system",
    "preset",
    "prove",
    "search",
]
