"""Exact invariants of finite set-theoretic Yang-Baxter solutions.

Element indices are 1-based throughout. Analysis reports are plain dicts with
the same fields as the ``ybetool --json-lines`` output.
"""

import json

from ._core import (
    BudgetExceeded,
    Error,
    IllDefinedRetraction,
    InvalidInput,
    PreconditionError,
    QuadraticSet,
    RetractionNotTrivial,
    enumerate,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Error",
    "IllDefinedRetraction",
    "InvalidInput",
    "PreconditionError",
    "QuadraticSet",
    "RetractionNotTrivial",
    "enumerate",
    "verify",
    "retract",
    "qmatrix",
    "lie",
]


def verify(q: QuadraticSet) -> dict:
    return json.loads(_core._verify(q))


def retract(q: QuadraticSet, levels: bool = False) -> dict:
    return json.loads(_core._retract(q, levels))


def qmatrix(q: QuadraticSet) -> dict:
    return json.loads(_core._qmatrix(q))


def lie(q: QuadraticSet) -> dict:
    return json.loads(_core._lie(q))
