"""Syntactic algebras of regular languages."""

from ._synalg import (
    Automaton,
    Error,
    Monoid,
    SizeGuardExceeded,
    isomorphic,
    lift,
    minimize,
    run_checks,
    syntactic_equivalent,
    syntactic_monoid,
    syntactic_quotient_oracle,
    transition_monoid,
    verify_mindual,
    verify_syndual,
)

__all__ = [
    "Automaton",
    "Error",
    "Monoid",
    "SizeGuardExceeded",
    "isomorphic",
    "lift",
    "minimize",
    "run_checks",
    "syntactic_equivalent",
    "syntactic_monoid",
    "syntactic_quotient_oracle",
    "transition_monoid",
    "verify_mindual",
    "verify_syndual",
]
