"""Occurrence-bounded reductions for quantified CNF formulas."""

import json

from ._occred import (
    BudgetExceeded,
    CertificationError,
    Formula,
    IncompleteAssignment,
    OccredError,
    OccurrenceBoundViolated,
    ParseError,
    TooLargeForExhaustive,
    game_value,
    solve_exists_occ2,
    unsat_count,
    verify_value_preservation,
)
from . import _occred

__all__ = [
    "BudgetExceeded",
    "CertificationError",
    "Formula",
    "IncompleteAssignment",
    "OccredError",
    "OccurrenceBoundViolated",
    "ParseError",
    "TooLargeForExhaustive",
    "expander",
    "gadget",
    "game_value",
    "occurrence_profile",
    "parse_qdimacs",
    "reduce",
    "solve_exists_occ2",
    "unsat_count",
    "verify_value_preservation",
]


def parse_qdimacs(text):
    return Formula.parse(text)


def occurrence_profile(formula):
    return json.loads(_occred._profile_json(formula))


def reduce(formula, steps=(1, 2, 3), style="expander", backend="benes", bypass=2):
    """Run the pipeline. Returns (reduced formula, trace dict)."""
    out, trace = _occred._reduce(formula, list(steps), style, backend, bypass)
    return out, json.loads(trace)


def gadget(ell, backend="benes", verify=None, samples=1000, seed=0):
    """Gadget graph as a dict; `verify` is None, "exhaustive" or "sampled"."""
    return json.loads(_occred._gadget_json(ell, backend, verify or "", samples, seed))


def expander(n, verify=None):
    """Expander as a dict; `verify` is None, "exhaustive" or "spectral"."""
    return json.loads(_occred._expander_json(n, verify or ""))
