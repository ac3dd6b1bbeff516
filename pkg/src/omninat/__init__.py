"""Exhaustive search over the conaturals.

The conaturals (non-increasing infinite bit sequences: every natural
number plus one point at infinity) admit a selection functional that
decides universal and existential statements about any continuous
decidable predicate in finite time.  This package provides the data
type, the search, a small predicate language with static continuity
bounds, a brute-force oracle for cross-checking, and sum-decision
gadgets that contrast the searchable conaturals with the merely
semi-searchable naturals.
"""

from .conat import (
    AtLeast,
    Classification,
    CoNat,
    Finite,
    FuelExhausted,
    classify,
    eq_upto,
    finite,
    from_fn,
    omega,
    set_step_limit,
    step_budget,
    steps_used,
    succ,
)
from .dsl import (
    AllBelow,
    And,
    BitAt,
    ConstFalse,
    ConstTrue,
    Expr,
    Implies,
    IndexTooLargeError,
    IsAtLeast,
    Not,
    Or,
    ParseError,
    compile_expr,
    modulus,
    parse,
    print_expr,
)
from .oracle import RepresentativeSet, brute_force_forall, representatives
from .search import (
    Counterexample,
    HoldsEverywhere,
    Predicate,
    SearchOutcome,
    SearchStats,
    check_density,
    default_classification_fuel,
    epsilon,
    find_counterexample,
    finite_forall,
    forall,
)
from .taboo import (
    Decision,
    Empty,
    Found,
    Inhabited,
    Left,
    Right,
    SumElem,
    Unknown,
    bounded_lpo,
    cbbb_check,
    demo_sum_maps,
    f_inject,
    g_embed,
    sur_decides,
)

__version__ = "0.1.0"

__all__ = [
    "AtLeast",
    "Classification",
    "CoNat",
    "Finite",
    "FuelExhausted",
    "classify",
    "eq_upto",
    "finite",
    "from_fn",
    "omega",
    "set_step_limit",
    "step_budget",
    "steps_used",
    "succ",
    "AllBelow",
    "And",
    "BitAt",
    "ConstFalse",
    "ConstTrue",
    "Expr",
    "Implies",
    "IndexTooLargeError",
    "IsAtLeast",
    "Not",
    "Or",
    "ParseError",
    "compile_expr",
    "modulus",
    "parse",
    "print_expr",
    "RepresentativeSet",
    "brute_force_forall",
    "representatives",
    "Counterexample",
    "HoldsEverywhere",
    "Predicate",
    "SearchOutcome",
    "SearchStats",
    "check_density",
    "default_classification_fuel",
    "epsilon",
    "find_counterexample",
    "finite_forall",
    "forall",
    "Decision",
    "Empty",
    "Found",
    "Inhabited",
    "Left",
    "Right",
    "SumElem",
    "Unknown",
    "bounded_lpo",
    "cbbb_check",
    "demo_sum_maps",
    "f_inject",
    "g_embed",
    "sur_decides",
]
