"""Reasoning with the ranked modal logics CO and CO*."""

from colog._core import (
    BoundsError,
    Error,
    Formula,
    InputError,
    Model,
    ParseError,
    UnknownAtomError,
    Verdict,
    default_query,
    epsilon_entails,
    find_countermodel,
    rebuild,
    run_cli,
)

__all__ = [
    "BoundsError",
    "Error",
    "Formula",
    "InputError",
    "Model",
    "ParseError",
    "UnknownAtomError",
    "Verdict",
    "default_query",
    "epsilon_entails",
    "find_countermodel",
    "rebuild",
    "run_cli",
]
