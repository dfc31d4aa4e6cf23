"""Exact classifier for curves P(x) = Q(y)."""

import json

from ._core import ParseError, __version__, catalog, coefficients, normalize, selftest
from ._core import classify_json

__all__ = ["ParseError", "__version__", "catalog", "classify", "classify_json",
           "coefficients", "normalize", "selftest"]


def classify(p, q, *, witness=False, oracle="none", precision=256):
    """Report for the pair as a dict, same fields as the CLI's --json output."""
    return json.loads(classify_json(p, q, witness, oracle, precision))
