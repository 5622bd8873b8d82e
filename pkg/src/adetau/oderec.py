"""Linear ODEs with polynomial coefficients, Frobenius branches, and the
four-term recursion for the rank-four (5-spin) family.

The shipped catalogue (``data/odes.json``) holds the three dual
differential equations whose Frobenius-branch coefficients encode the
one-point invariants: the fourth-order 5-spin equation in X, the
second-order rank-four even equation in x, and the fourth-order E6
equation in x.  Coefficients are exact integers; a checksum test pins the
file.

A regular singular point at the origin is assumed throughout (true for
the catalogue).  ``branch_series`` turns an indicial root plus a step
into the monic coefficient recurrence; ``apply_ode`` re-substitutes a
Puiseux series and returns the residual.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .backend import ONE, Rat
from .scalar import poch_desc
from .series import LaurentSeries, PuiseuxSeries


@dataclass(frozen=True)
class ScalarODE:
    """sum_k p_k(x) y^(k) = 0 with integer polynomial coefficients."""

    name: str
    variable: str
    terms: tuple  # tuple of (derivative order k, {exponent: int coefficient})

    def offsets(self):
        """All exponent shifts e - k occurring in the equation."""
        return sorted({e - k for k, poly in self.terms for e in poly})


@dataclass(frozen=True)
class BranchSpec:
    """Solution ansatz x^rho * sum_n a_n x^(step*n), a_0 = 1."""

    rho: object  # rational exponent
    step: int


_catalogue_cache = None


def catalogue() -> dict:
    """The shipped ODEs, keyed ``a4_dual`` / ``d4_dual`` / ``e6_dual``."""
    global _catalogue_cache
    if _catalogue_cache is None:
        raw = json.loads(resources.files("adetau.data").joinpath("odes.json").read_text())
        out = {}
        for name, ode in raw.items():
            terms = tuple(
                (t["order"], {e: int(c) for e, c in t["coeff_poly"]}) for t in ode["terms"]
            )
            out[name] = ScalarODE(name, ode["variable"], terms)
        _catalogue_cache = out
    return _catalogue_cache


# ---------------------------------------------------------------------------
# indicial equation


def _indicial_polynomial(ode: ScalarODE):
    """Coefficients {power: int} of the indicial polynomial I(rho).

    I(rho) = sum over monomials with minimal exponent shift of
    c * rho (rho-1) ... (rho-k+1), expanded exactly.
    """
    d0 = ode.offsets()[0]
    poly = {}
    for k, coeffs in ode.terms:
        for e, c in coeffs.items():
            if e - k != d0:
                continue
            term = {0: Rat(c)}
            for i in range(k):
                nxt = {}
                for p, a in term.items():
                    nxt[p + 1] = nxt.get(p + 1, Rat(0)) + a
                    nxt[p] = nxt.get(p, Rat(0)) - a * i
                term = nxt
            for p, a in term.items():
                poly[p] = poly.get(p, Rat(0)) + a
    return {p: a for p, a in poly.items() if a}


def _poly_eval(poly: dict, x):
    return sum((a * x ** p for p, a in poly.items()), Rat(0))


def _deflate(poly: dict, root):
    """Exact synthetic division by (rho - root); poly must vanish at root."""
    deg = max(poly)
    coeffs = [poly.get(p, Rat(0)) for p in range(deg + 1)]
    out = [Rat(0)] * deg
    carry = Rat(0)
    for p in range(deg, 0, -1):
        carry = coeffs[p] + carry * root if p < deg else coeffs[p]
        out[p - 1] = carry
    rem = coeffs[0] + carry * root
    if rem != 0:
        raise ArithmeticError("deflation at a non-root")
    return {p: c for p, c in enumerate(out) if c}


def indicial_roots(ode: ScalarODE):
    """All rational roots (with multiplicity) of the indicial polynomial.

    Roots are located numerically, then rationalized and verified exactly;
    any irrational or complex root left over is reported as unsolved.
    """
    import numpy as np

    poly = _indicial_polynomial(ode)
    roots = []
    while poly and max(poly) > 0:
        deg = max(poly)
        arr = [float(poly.get(p, Rat(0))) for p in range(deg, -1, -1)]
        scale = max(abs(a) for a in arr)
        numeric = np.roots([a / scale for a in arr])
        found = None
        for z in numeric:
            if abs(z.imag) > 1e-6:
                continue
            for bound in (12, 144, 10_000, 10 ** 6):
                cand = Fraction(z.real).limit_denominator(bound)
                cand = Rat(cand.numerator) / Rat(cand.denominator)
                if _poly_eval(poly, cand) == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise ValueError(
                f"indicial equation of {ode.name} has irrational or complex roots "
                f"(unsolved residual of degree {deg})"
            )
        roots.append(found)
        poly = _deflate(poly, found)
    return sorted(roots)


# ---------------------------------------------------------------------------
# Frobenius branches


def branch_series(ode: ScalarODE, spec: BranchSpec, N: int) -> LaurentSeries:
    """Monic branch coefficients a_0 = 1, ..., a_N for x^rho sum a_n x^(s n).

    Requires every exponent shift of the equation to be congruent modulo
    the step (otherwise the ansatz leaves unmatched exponent classes), a
    vanishing indicial value at rho, and no resonance I(rho + s n) = 0
    for n >= 1.
    """
    s = spec.step
    rho = spec.rho
    offsets = ode.offsets()
    d0 = offsets[0]
    if any((o - d0) % s for o in offsets):
        raise ValueError(f"step {s} leaves unmatched exponent classes {offsets}")
    ind = _indicial_polynomial(ode)
    if _poly_eval(ind, rho) != 0:
        raise ValueError(f"{rho} is not an indicial root of {ode.name}")
    a = [ONE] + [Rat(0)] * N
    for n in range(1, N + 1):
        lead = Rat(0)
        acc = Rat(0)
        for k, coeffs in ode.terms:
            for e, c in coeffs.items():
                q, rem = divmod(d0 + s * n - (e - k), s)
                if rem or q < 0 or q > n:
                    continue
                term = c * poch_desc(rho + s * q, k)
                if q == n:
                    lead = lead + term
                else:
                    acc = acc + term * a[q]
        if lead == 0:
            raise ArithmeticError(f"resonance at n = {n} for root {rho} of {ode.name}")
        a[n] = -acc / lead
    return LaurentSeries(0, a, N + 1)


def apply_ode(ode: ScalarODE, phi: PuiseuxSeries) -> PuiseuxSeries:
    """Residual sum_k p_k(x) phi^(k); identically zero for true solutions.

    Truncation is tracked through the series arithmetic, so every
    coefficient of the result is a genuinely verified one.
    """
    q = phi.branch_denominator
    total = None
    deriv = phi
    for k in range(0, max(k for k, _ in ode.terms) + 1):
        coeffs = dict(ode.terms).get(k)
        if coeffs:
            for e, c in coeffs.items():
                piece = PuiseuxSeries(q, deriv.body.shift(e * q).scale(Rat(c)))
                total = piece if total is None else total + piece
        deriv = deriv.differentiate()
    return total


# ---------------------------------------------------------------------------
# the 5-spin recursion


# initial values tau_0..tau_4 of the rank-four family (the recursion's
# leading coefficient vanishes at g = 0, 1, 2, 4)
A4_SEEDS = (
    Rat(1),
    Rat(1, 6),
    Rat(11, 3600),
    Rat(0),
    Rat(341, 25920000),
)


def _a4_recursion_coeffs(g: int):
    c1 = 2 ** 8 * 3 ** 4 * 5 ** 17 * 31 * g * (g - 1) * (g - 2) * (g - 4)
    c2 = 5 ** 11 * (
        2 ** 8 * 3 ** 4 * g ** 4
        - 2 ** 13 * 3 ** 4 * g ** 3
        + 2 ** 4 * 3 ** 2 * 54331 * g ** 2
        - 2 ** 4 * 3 ** 2 * 43 * 6329 * g
        + 5 * 7 * 2013229
    )
    c3 = 2 ** 2 * 5 ** 6 * (2 ** 2 * 3 ** 2 * 5 * g ** 2 - 2 ** 2 * 3 ** 3 * 5 * 7 * g + 19739)
    return c1, c2, c3


def tau_a4_recursion(gmax: int):
    """tau_0..tau_gmax of the 5-spin family by the four-term recursion."""
    taus = list(A4_SEEDS[: gmax + 1])

    def at(i):
        return taus[i] if i >= 0 else Rat(0)

    for g in range(len(taus), gmax + 1):
        c1, c2, c3 = _a4_recursion_coeffs(g)
        taus.append((c2 * at(g - 5) - c3 * at(g - 10) + at(g - 15)) / c1)
    return taus


def recursion_check_a4(taus) -> tuple:
    """Verify the four-term recursion on a 5-spin value table.

    Returns (True, None) when every index satisfies it, otherwise
    (False, first violated g).
    """

    def at(i):
        return taus[i] if 0 <= i < len(taus) else Rat(0)

    for g in range(len(taus)):
        c1, c2, c3 = _a4_recursion_coeffs(g)
        if c1 * at(g) - c2 * at(g - 5) + c3 * at(g - 10) - at(g - 15) != 0:
            return False, g
    return True, None
