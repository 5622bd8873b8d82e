"""adetau: exact one-point intersection numbers of ADE type.

Computes the genus-by-genus one-point invariants of the A, D and E6
families by several independent exact algorithms (holonomic recursion,
closed Pochhammer sums, algebraic generating functions, kernel product
formulas, terminating hypergeometric sums, and a brute-force
pseudodifferential oracle), cross-verifies them, certifies the
integrality of the renormalized 5-spin sequences, checks the
calibration duality at the special points, and validates the asymptotic
laws numerically.
"""

from .backend import BACKEND, Rat, rat, rat_from_str, rat_to_str

__version__ = "0.1.0"

__all__ = ["BACKEND", "Rat", "rat", "rat_from_str", "rat_to_str", "__version__"]
