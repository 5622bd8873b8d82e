"""Integrality of the renormalized 5-spin sequences.

Three renormalizations a_g, b_g, c_g of the rank-four values are integral
away from the primes {2, 3, 5}.  This module implements the
renormalizations by residue class, the per-summand Pochhammer products
whose 5-integrality underlies the c-sequence, and an exact
piecewise-constant analysis of the floor-function combinations whose
non-negativity is the p-adic heart of the proof: the break-line
arrangement inside the unit square is enumerated cell by cell over Q,
each open cell is a convex polygon, and the constant value on it is read
off at the centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import ONE, Rat
from .scalar import poch_asc, poch_signed, sign_pow


# ---------------------------------------------------------------------------
# renormalizations


def normalize_abc(g: int, tau):
    """(a_g, b_g, c_g) from tau at genus g, by residue class mod 5.

    Uniformly a_g = ((-1)^m / 5) (A)_m tau with m = [(2g-1)/5] and
    A = {(2g-1)/5}; the b and c rows pair A with B = {(3g+1)/5} and
    C = {(4g+3)/5} at class-dependent lengths.  All three vanish with tau
    on the g = 3 (mod 5) class.
    """
    gm = g % 5
    if gm == 3:
        return Rat(0), Rat(0), Rat(0)
    if gm == 0:
        n = g // 5
        AA, BB, CC = Rat(4, 5), Rat(1, 5), Rat(3, 5)
        la, lb, lc, sign = 2 * n - 1, (n, n), (n, n), -1
    elif gm == 4:
        n = (g + 1) // 5
        AA, BB, CC = Rat(2, 5), Rat(3, 5), Rat(4, 5)
        la, lb, lc, sign = 2 * n - 1, (n, n), (n, n), -1
    elif gm == 2:
        n = (g + 3) // 5
        AA, BB, CC = Rat(3, 5), Rat(2, 5), Rat(1, 5)
        la, lb, lc, sign = 2 * n - 2, (n - 1, n), (n - 1, n), 1
    else:  # gm == 1
        n = (g + 4) // 5
        AA, BB, CC = Rat(1, 5), Rat(4, 5), Rat(2, 5)
        la, lb, lc, sign = 2 * n - 2, (n, n - 1), (n, n - 1), 1
    a = sign * Rat(1, 5) * poch_signed(AA, la) * tau
    b = poch_asc(AA, lb[0]) * poch_asc(BB, lb[1]) * tau
    c = poch_asc(AA, lc[0]) * poch_asc(CC, lc[1]) * tau
    return a, b, c


def in_ring_Z_inv(q, allowed_primes) -> bool:
    """True iff every prime factor of the denominator lies in the set."""
    d = int(q.denominator)
    for p in allowed_primes:
        while d % p == 0:
            d //= p
    return d == 1


def cg_summand(g: int, s: int):
    """The residue-class Pochhammer product c_g^[s]; each lies in Z[1/5].

    Defined for g != 3 (mod 5) and 0 <= s <= g/2; the assembly
    c_g = 6^-g sum_s 2^-2s (-9)^s c_g^[s] reproduces normalize_abc's c_g.
    """
    if not 0 <= 2 * s <= g:
        raise ValueError("s out of range (need 0 <= s <= g/2)")
    gm = g % 5
    f5 = Rat(5) ** (-2 * s)
    if gm == 0:
        n = g // 5
        num = poch_asc(Rat(3, 5), n) * poch_asc(Rat(4, 5), n) * poch_asc(Rat(1, 5), 3 * n - s)
        return f5 * num / (math.factorial(s) * math.factorial(5 * n - 2 * s))
    if gm == 4:
        n = (g + 1) // 5
        num = poch_asc(Rat(2, 5), n) * poch_asc(Rat(4, 5), n) * poch_asc(Rat(3, 5), 3 * n - 1 - s)
        return f5 * num / (math.factorial(s) * math.factorial(5 * n - 1 - 2 * s))
    if gm == 2:
        n = (g + 3) // 5
        num = poch_asc(Rat(3, 5), n - 1) * poch_asc(Rat(1, 5), n) * poch_asc(Rat(2, 5), 3 * n - 2 - s)
        return f5 * num / (math.factorial(s) * math.factorial(5 * n - 3 - 2 * s))
    if gm == 1:
        n = (g + 4) // 5
        num = poch_asc(Rat(1, 5), n) * poch_asc(Rat(2, 5), n - 1) * poch_asc(Rat(4, 5), 3 * n - 3 - s)
        return f5 * num / (math.factorial(s) * math.factorial(5 * n - 4 - 2 * s))
    raise ValueError("c_g^[s] is not defined on the vanishing class g = 3 (mod 5)")


def cg_assemble(g: int):
    """c_g = 6^-g sum_{0<=s<=g/2} 2^-2s (-9)^s c_g^[s]."""
    acc = Rat(0)
    for s in range(g // 2 + 1):
        acc = acc + Rat(2) ** (-2 * s) * Rat(-9) ** s * cg_summand(g, s)
    return Rat(6) ** (-g) * acc


# ---------------------------------------------------------------------------
# floor-function arrangements


def _floor_rat(q) -> int:
    return int(q.numerator) // int(q.denominator)


@dataclass(frozen=True)
class FloorFuncSpec:
    """value(x, y) = sum_t sign_t * floor(a_t x + b_t y + c_t)."""

    name: str
    forms: tuple  # tuple of (a: int, b: int, c: Rat)
    signs: tuple  # tuple of +1 / -1

    def value(self, x, y):
        acc = 0
        for (a, b, c), s in zip(self.forms, self.signs):
            acc += s * _floor_rat(a * x + b * y + c)
        return acc

    def is_doubly_periodic(self) -> bool:
        """Period 1 in each variable: the integer parts of the shifts cancel."""
        return (
            sum(s * a for (a, _, _), s in zip(self.forms, self.signs)) == 0
            and sum(s * b for (_, b, _), s in zip(self.forms, self.signs)) == 0
        )


def _spec(name, rows):
    forms = tuple((a, b, Rat(cn, cd)) for a, b, cn, cd in (r[:4] for r in rows))
    signs = tuple(r[4] for r in rows)
    return FloorFuncSpec(name, forms, signs)


# the four f and four g combinations certified non-negative
F_SPECS = (
    _spec("f1", [(1, 0, 2, 5, 1), (1, 0, 1, 5, 1), (3, -1, 4, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("f2", [(1, 0, 1, 5, 1), (1, 0, 3, 5, 1), (3, -1, 2, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("f3", [(1, 0, 4, 5, 1), (1, 0, 2, 5, 1), (3, -1, 3, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("f4", [(1, 0, 3, 5, 1), (1, 0, 4, 5, 1), (3, -1, 1, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
)
G_SPECS = (
    _spec("g1", [(1, 0, 1, 5, 1), (1, 0, 4, 5, 1), (3, -1, 4, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("g2", [(1, 0, 3, 5, 1), (1, 0, 2, 5, 1), (3, -1, 2, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("g3", [(1, 0, 2, 5, 1), (1, 0, 3, 5, 1), (3, -1, 3, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
    _spec("g4", [(1, 0, 4, 5, 1), (1, 0, 1, 5, 1), (3, -1, 1, 5, 1), (0, 1, 0, 1, -1), (5, -2, 0, 1, -1)]),
)


def _break_lines(spec: FloorFuncSpec):
    """Lines a x + b y + c' = 0 where some floor argument crosses an integer
    inside the closed unit square, deduplicated up to scaling."""
    seen = {}
    for a, b, c in spec.forms:
        corners = [a * x + b * y + c for x in (Rat(0), Rat(1)) for y in (Rat(0), Rat(1))]
        lo, hi = min(corners), max(corners)
        k = _floor_rat(lo) if lo == _floor_rat(lo) else _floor_rat(lo) + 1
        while k <= hi:
            line = (a, b, c - k)
            ga, gb, gc = line
            # normalize representative: clear denominators, fix sign, divide gcd
            den = int(gc.denominator)
            na, nb, nc = ga * den, gb * den, int(gc.numerator)
            gg = math.gcd(math.gcd(abs(na), abs(nb)), abs(nc)) or 1
            na, nb, nc = na // gg, nb // gg, nc // gg
            if (na, nb, nc) < (0, 0, 0) or (na < 0) or (na == 0 and nb < 0):
                na, nb, nc = -na, -nb, -nc
            seen[(na, nb, nc)] = (a, b, c - k)
            k += 1
    return list(seen.values())


def _split_polygon(poly, a, b, c):
    """Split a convex polygon (CCW vertex list) by a x + b y + c = 0."""
    vals = [a * x + b * y + c for x, y in poly]
    if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
        return [poly]
    pos, neg = [], []
    n = len(poly)
    for i in range(n):
        p, vp = poly[i], vals[i]
        q, vq = poly[(i + 1) % n], vals[(i + 1) % n]
        if vp >= 0:
            pos.append(p)
        if vp <= 0:
            neg.append(p)
        if (vp > 0 > vq) or (vp < 0 < vq):
            t = vp / (vp - vq)
            cut = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
            pos.append(cut)
            neg.append(cut)
    out = []
    for part in (pos, neg):
        if len(part) >= 3 and _polygon_area2(part) != 0:
            out.append(part)
    return out


def _polygon_area2(poly):
    acc = Rat(0)
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        acc = acc + x1 * y2 - x2 * y1
    return acc


def _centroid(poly):
    n = len(poly)
    return (sum((p[0] for p in poly), Rat(0)) / n, sum((p[1] for p in poly), Rat(0)) / n)


@dataclass
class ArrangementReport:
    name: str
    min_value: int
    max_value: int
    cell_count: int
    cells: list  # (vertices, value)

    def json_obj(self) -> dict:
        from .backend import rat_to_str

        return {
            "name": self.name,
            "min": self.min_value,
            "max": self.max_value,
            "cells": [
                {"vertices": [[rat_to_str(x), rat_to_str(y)] for x, y in verts], "value": val}
                for verts, val in self.cells
            ],
        }


def arrangement_analyze(spec: FloorFuncSpec) -> ArrangementReport:
    """Exact min/max of a doubly periodic floor combination over the plane.

    The break lines of all floor arguments are intersected with the unit
    square; iterated half-plane splitting enumerates the open cells of the
    arrangement as convex polygons with rational vertices, and the
    piecewise-constant value is evaluated at each centroid.  Boundary
    points always agree with an adjacent open cell, so cell values cover
    the whole plane by periodicity.
    """
    if not spec.is_doubly_periodic():
        raise ValueError(f"{spec.name} is not doubly periodic; square analysis insufficient")
    square = [(Rat(0), Rat(0)), (Rat(1), Rat(0)), (Rat(1), Rat(1)), (Rat(0), Rat(1))]
    cells = [square]
    for a, b, c in _break_lines(spec):
        nxt = []
        for poly in cells:
            nxt.extend(_split_polygon(poly, a, b, c))
        cells = nxt
    evaluated = []
    for poly in cells:
        if _polygon_area2(poly) == 0:
            raise ArithmeticError(f"degenerate zero-area cell in {spec.name}")
        cx, cy = _centroid(poly)
        evaluated.append((poly, spec.value(cx, cy)))
    values = [v for _, v in evaluated]
    return ArrangementReport(spec.name, min(values), max(values), len(evaluated), evaluated)


def second_interior_point(poly):
    """A second interior point of a convex cell (asymmetric vertex average)."""
    n = len(poly)
    wx = poly[0][0] * 2 + sum((p[0] for p in poly[1:]), Rat(0))
    wy = poly[0][1] * 2 + sum((p[1] for p in poly[1:]), Rat(0))
    return wx / (n + 1), wy / (n + 1)
