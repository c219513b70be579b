"""Concolic test generation for pure definite logic programs."""

import json

from ._core import ContestError, ParseError, coverage, execute, fixture_source, mgu, solve
from ._core import run as _run

__all__ = [
    "ContestError",
    "ParseError",
    "coverage",
    "execute",
    "fixture_source",
    "mgu",
    "run",
    "solve",
]


def run(source, goal, inp=(1,), depth=2, max_alternatives=64, fuel=100000):
    """Generate test cases for goal; returns the report as a dict."""
    return json.loads(_run(source, goal, list(inp), depth, max_alternatives, fuel))
