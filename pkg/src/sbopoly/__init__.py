"""Exact construction and verification of block orthogonal polynomials.

A monic degree-n member of block i is orthogonal to every polynomial of
degree below i under the first weight and orthogonal to all other members
under the doubled weight; the two classical weight pairs (Gaussian on the
line, gamma-type on the half line) are built by several independent routes,
cross-checked exactly, and examined for real-zero structure.
"""

from .alphapoly import ALPHA, AlphaPoly
from .poly import Poly, X, monomial, pretty, latex
from .reporting import (EXPECTED_NEGATIVE, FAIL, PASS, Check,
                        RealnessCounterexample, all_ok, check, failures)
from . import (classical, gammaops, hermite_sbo, laguerre_sbo, measures,
               oracle, serialize, suites, zeros)

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "AlphaPoly", "Poly", "X", "monomial", "pretty", "latex",
    "EXPECTED_NEGATIVE", "FAIL", "PASS", "Check", "RealnessCounterexample",
    "all_ok", "check", "failures", "classical", "gammaops", "hermite_sbo",
    "laguerre_sbo", "measures", "oracle", "serialize", "suites", "zeros",
    "__version__",
]
