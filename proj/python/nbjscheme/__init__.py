"""Exact verifier for the non-binary Johnson association scheme.

All exact rationals cross the boundary as canonical "num/den" strings; use
fractions.Fraction to compute with them.
"""

import json
from fractions import Fraction

from ._core import DomainError, ResourceError, domain, poly_eval, run_checks_json, vertex_count

__all__ = [
    "DomainError",
    "ResourceError",
    "domain",
    "poly_eval",
    "poly_eval_fraction",
    "run_checks",
    "vertex_count",
]


def poly_eval_fraction(family, i, x, N, p):
    """poly_eval with the result parsed into a fractions.Fraction."""
    return Fraction(poly_eval(family, i, x, N, p))


def run_checks(r, k, n, checks=("all",), max_vertices=5000, bases=3, tables=False):
    """Run the selected checks and return (report_dict, exit_code).

    exit_code is 0 when every selected check passed and 2 otherwise.
    """
    report, code = run_checks_json(r, k, n, list(checks), max_vertices, bases, tables)
    return json.loads(report), code
