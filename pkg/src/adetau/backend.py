"""Rational-arithmetic backend selection.

All exact arithmetic in this package runs on one of two interchangeable
scalar types:

* ``gmpy2.mpq`` -- GMP-backed rationals from the compiled gmpy2 extension
  (the default whenever gmpy2 imports), and
* ``fractions.Fraction`` -- the pure-Python fallback from the standard
  library.

The choice is made once at import time.  Set ``ADETAU_BACKEND=fractions``
(or ``python``) to force the pure-Python path, ``ADETAU_BACKEND=gmpy2`` to
require the compiled one.  ``benchmarks/bench_backends.py`` compares the
two on the hot pipelines.
"""

from __future__ import annotations

import os
from fractions import Fraction

_requested = os.environ.get("ADETAU_BACKEND", "").strip().lower()

if _requested in ("fractions", "fraction", "python", "pure"):
    BACKEND = "fractions"
    Rat = Fraction
elif _requested in ("gmpy2", "gmp"):
    from gmpy2 import mpq as Rat  # hard requirement when forced

    BACKEND = "gmpy2"
else:
    try:
        from gmpy2 import mpq as Rat

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on environment
        BACKEND = "fractions"
        Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)


def rat(numerator, denominator=None):
    """Build a backend rational from ints, strings or another rational."""
    if denominator is None:
        if isinstance(numerator, str):
            return rat_from_str(numerator)
        return Rat(numerator)
    return Rat(numerator) / Rat(denominator)


def rat_from_str(s: str):
    """Parse ``"num/den"`` or ``"num"`` (optionally signed)."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Rat(int(num)) / Rat(int(den))
    return Rat(int(s))


def rat_to_str(q) -> str:
    """Serialize a rational as ``"num/den"`` (plain ``"num"`` for integers)."""
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def is_rational(x) -> bool:
    return hasattr(x, "numerator") and hasattr(x, "denominator")
