"""Goodstein sequences in hereditary notation, with their ordinal mirrors."""

import json

from ._core import (
    Budget,
    BudgetExceeded,
    GoodsteinError,
    Rep,
    decompose,
    generate,
    parse,
    predict_termination,
    verify_json,
)

__all__ = [
    "Budget",
    "BudgetExceeded",
    "GoodsteinError",
    "Rep",
    "decompose",
    "generate",
    "parse",
    "predict_termination",
    "verify",
]


def verify(seeds, claims=(), budget=None):
    """Run the claim checks on G(m) for each seed; returns one dict per verdict."""
    budget = Budget() if budget is None else budget
    return json.loads(verify_json(list(seeds), list(claims), budget))
