"""Pseudodifferential-operator calculus with polynomial coefficients.

Operators are finite sums  sum_k p_k(x) d^k  with integer order k of either
sign and exact polynomial coefficients p_k.  Composition uses the
generalized Leibniz rule

    d^m o f(x) = sum_l binom(m, l) f^(l)(x) d^{m-l}   (any integer m),

which terminates because the coefficients are polynomials.  This module is
the brute-force oracle for the residue formulas: r-th roots are computed
order by order, fractional powers as root powers, and the tau numbers drop
out of the d^{-1} coefficient at x = 0.

Depth bookkeeping is explicit: ``min_order`` is the lowest reliably known
order (``None`` for exact operators such as the shipped Lax operators).
Reading below it raises instead of returning partial data.
"""

from __future__ import annotations

import math

from .backend import ONE, Rat
from .scalar import gen_binom, poch_asc, sign_pow
from . import kernels

# -- coefficient polynomials as tuples (index = power of x) -----------------


def _ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _padd(a, b):
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return tuple(out)


def _pderiv(p):
    return tuple(i * c for i, c in enumerate(p))[1:]


def _pscale(p, c):
    return tuple(c * x for x in p)


class PsiDOp:
    """Pseudodifferential operator sum_{k} p_k(x) d^k.

    ``terms`` maps integer order to a coefficient polynomial (tuple of
    scalars, index = x-power).  Orders below ``min_order`` have been
    truncated away; ``min_order=None`` marks an exact operator.
    """

    __slots__ = ("terms", "min_order")

    def __init__(self, terms: dict, min_order=None):
        clean = {}
        for k, p in terms.items():
            p = _ptrim(p)
            if p and (min_order is None or k >= min_order):
                clean[k] = p
        self.terms = clean
        self.min_order = min_order

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls) -> "PsiDOp":
        return cls({0: (ONE,)})

    @classmethod
    def from_terms(cls, terms: dict, min_order=None) -> "PsiDOp":
        return cls({k: tuple(p) for k, p in terms.items()}, min_order)

    # -- inspection -------------------------------------------------------

    def max_order(self) -> int:
        return max(self.terms, default=0)

    def coeff(self, order: int):
        """Coefficient polynomial of d^order (raises below min_order)."""
        if self.min_order is not None and order < self.min_order:
            raise ValueError(
                f"order {order} was truncated away (known only down to {self.min_order})"
            )
        return self.terms.get(order, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PsiDOp):
            return NotImplemented
        lo = None
        for m in (self.min_order, other.min_order):
            if m is not None:
                lo = m if lo is None else max(lo, m)
        keys = set(self.terms) | set(other.terms)
        if lo is not None:
            keys = {k for k in keys if k >= lo}
        return all(self.terms.get(k, ()) == other.terms.get(k, ()) for k in keys)

    def __repr__(self):
        ks = sorted(self.terms, reverse=True)[:4]
        parts = [f"({list(self.terms[k])})d^{k}" for k in ks]
        tail = f" + [below d^{self.min_order} unknown]" if self.min_order is not None else ""
        return f"<PsiDOp {' + '.join(parts) if parts else '0'}{tail}>"

    # -- algebra ----------------------------------------------------------

    def __add__(self, other):
        lo = None
        for m in (self.min_order, other.min_order):
            if m is not None:
                lo = m if lo is None else max(lo, m)
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = _padd(out.get(k, ()), p)
        return PsiDOp(out, lo)

    def __neg__(self):
        return PsiDOp({k: _pscale(p, -1) for k, p in self.terms.items()}, self.min_order)

    def __sub__(self, other):
        return self + (-other)

    def compose(self, other: "PsiDOp") -> "PsiDOp":
        """Operator product, truncated pessimistically.

        With A known down to a_min and B down to b_min, products touching
        unknown coefficients pollute every order below
        max(a_min + max(B), b_min + max(A)); that becomes the result's
        ``min_order``.
        """
        if self.min_order is None and other.min_order is None:
            floor = None
        else:
            a_min = self.min_order if self.min_order is not None else -(10 ** 9)
            b_min = other.min_order if other.min_order is not None else -(10 ** 9)
            floor = max(a_min + other.max_order(), b_min + self.max_order())
        return _compose_floor(self, other, floor)

    def adjoint(self) -> "PsiDOp":
        """Formal adjoint sum (-1)^k d^k o p_k, renormalized to left form."""
        out = {}
        for k, p in self.terms.items():
            sign = sign_pow(k)
            d = p
            l = 0
            while d:
                c = gen_binom(Rat(k), l)
                if c:
                    o = k - l
                    out[o] = _padd(out.get(o, ()), _pscale(d, sign * c))
                l += 1
                d = _pderiv(d)
        return PsiDOp(out, self.min_order)

    def residue(self):
        """Coefficient polynomial of d^{-1} (errors when truncated away)."""
        return list(self.coeff(-1))


def _compose_floor(A: PsiDOp, B: PsiDOp, floor) -> PsiDOp:
    out = {}
    for k, pk in A.terms.items():
        for j, qj in B.terms.items():
            d = qj
            l = 0
            while d:
                o = k - l + j
                if floor is not None and o < floor:
                    break
                c = gen_binom(Rat(k), l)
                if c:
                    out[o] = _padd(out.get(o, ()), _pmul(pk, _pscale(d, c)))
                l += 1
                d = _pderiv(d)
    return PsiDOp(out, floor)


def compose(A: PsiDOp, B: PsiDOp) -> PsiDOp:
    return A.compose(B)


def adjoint(A: PsiDOp) -> PsiDOp:
    return A.adjoint()


def residue(A: PsiDOp):
    return A.residue()


def op_power(R: PsiDOp, k: int, floor: int) -> PsiDOp:
    """R^k keeping orders >= floor in the final result.

    Intermediate powers are kept one order deeper per remaining factor,
    which is exactly what the Leibniz rule consumes.  R itself must be
    reliable down to floor - (k - 1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    need = floor - (k - 1)
    if R.min_order is not None and R.min_order > need:
        raise ValueError(
            f"operator known only to order {R.min_order}, need {need} for this power"
        )
    P = PsiDOp(dict(R.terms), None)
    for s in range(2, k + 1):
        P = _compose_floor(P, PsiDOp(dict(R.terms), None), floor - (k - s))
    return PsiDOp(P.terms, floor)


def rth_root(L: PsiDOp, r: int, depth: int) -> PsiDOp:
    """Monic r-th root R = d + sum_{k<=0} a_k(x) d^k with R^r = L.

    ``L`` must be exact, monic of order r with no higher terms.  The
    coefficient a_{-m} is fixed order by order from the defect of R^r at
    order r-1-m; the returned operator is reliable down to -depth.
    """
    if L.min_order is not None:
        raise ValueError("root of a truncated operator is not defined")
    if L.max_order() != r or L.coeff(r) != (ONE,):
        raise ValueError("operator must be monic of order r")
    R = {1: (ONE,)}
    for m in range(depth + 1):
        P = op_power(PsiDOp(R, None), r, r - 1 - m)
        want = L.terms.get(r - 1 - m, ())
        got = P.terms.get(r - 1 - m, ())
        defect = _padd(want, _pscale(got, -1))
        a = _ptrim(_pscale(defect, Rat(1, r)))
        if a:
            R[-m] = _padd(R.get(-m, ()), a)
    return PsiDOp(R, -depth)


# ---------------------------------------------------------------------------
# tau numbers from residues


_D_DEPTH_LIMIT = 200


def _index_split(family: str, r: int, g: int):
    """(exponent m_alpha, q) with 2(r+1)g - 1 = m_alpha + r(q+1)."""
    val = 2 * (r + 1) * g - 1
    if family == "A":
        m_alpha = (2 * g - 1) % r
        if m_alpha == 0:
            return None  # vanishing class
    elif family == "D":
        m_alpha = (2 * g - 1) % r
    else:
        raise ValueError(f"unknown family {family!r}")
    q = (val - m_alpha) // r - 1
    return m_alpha, q


def lax_operator(family: str, r: int) -> PsiDOp:
    """Initial-data Lax operator: d^r + r x, with an extra -(r/2) d^{-1}
    term for the even-rank (D) family."""
    terms = {r: (ONE,), 0: (0, Rat(r))}
    if family == "D":
        if r % 2:
            raise ValueError("D family needs even Coxeter number")
        terms[-1] = (Rat(-r, 2),)
    return PsiDOp(terms)


def tau_from_psido(family: str, r: int, g: int):
    """One-point invariant from the d^{-1} coefficient of L^{(2g(r+1)-1)/r}.

    Exact but exponentially expensive in g; this is the independent
    cross-check for the closed/series methods, not a production path.
    """
    if g == 0:
        return Rat(1)
    if g < 0:
        return Rat(0)
    k = 2 * g * (r + 1) - 1
    if k > _D_DEPTH_LIMIT:
        raise ValueError(
            f"depth {k + 1} operator orders with degree-{k} coefficients is intractable; "
            f"use a series method for g this large"
        )
    split = _index_split(family, r, g)
    if split is None:
        return Rat(0)
    m_alpha, q = split
    L = lax_operator(family, r)
    R = rth_root(L, r, k)
    P = op_power(R, k, -1)
    z = P.coeff(-1)
    z0 = z[0] if z else Rat(0)
    return sign_pow(q + g) * z0 / (Rat(r) ** (3 * g) * poch_asc(Rat(m_alpha, r), q + 2))


def residue_at_zero(r: int, C, k: int):
    """z_k(0) = (res L^{k/r})(0) for L = d^r + C x."""
    L = PsiDOp({r: (ONE,), 0: (0, C)})
    R = rth_root(L, r, k)
    P = op_power(R, k, -1) if k > 1 else PsiDOp(dict(R.terms), -1)
    z = P.coeff(-1)
    return z[0] if z else Rat(0)


# ---------------------------------------------------------------------------
# wave-function pairing


def pairing_defect(r: int, C, i: int, N: int):
    """Residues in z of d^i(psi) psi* dz, one per power of x, through x^N.

    psi and psi* expand through the f-kernels as
    psi   = sum_m (xz)^m/m!  f_{m+i}(T),   T =  (C/r) z^{-(r+1)},
    psi*  = sum_l (-xz)^l/l! f_l(-T),
    and the z-residue at x^M survives only when (r+1) | M+i+1.  The pairing
    property says every entry is exactly zero; the return value is the
    defect series (coefficient of x^M at index M).
    """
    from .series import LaurentSeries

    out = []
    for M in range(N + 1):
        q, rem = divmod(M + i + 1, r + 1)
        if rem != 0:
            out.append(Rat(0))
            continue
        total = Rat(0)
        for m in range(M + 1):
            l = M - m
            fm = kernels.f_series(r, m + i, q + 1)
            fl = kernels.f_series(r, l, q + 1)
            fl_neg = LaurentSeries(0, [c * sign_pow(k) for k, c in enumerate(fl.coeffs)], q + 1) if fl.coeffs else fl
            prod = fm * fl_neg
            total = total + sign_pow(l) * (Rat(C) / r) ** q * prod[q] / (
                math.factorial(m) * math.factorial(l)
            )
        out.append(total)
    return LaurentSeries(0, out, N + 1)


def wave_product_series(r: int, C, N: int):
    """H(z) = f_0(T) f_0(-T) at T = (C/r) z^{-(r+1)}, as z^{-1}-coefficients.

    Returns [H_0, H_1, ..., H_N] with H(z) = sum H_k z^{-k}; matches
    1 + sum_k (-1)^k z_{k-1}(0) z^{-k} computed from operator residues.
    """
    K = N // (r + 1) + 1
    f0 = kernels.f_series(r, 0, K + 1)
    f0m = _alternate(f0)
    prod = f0 * f0m
    out = [Rat(0)] * (N + 1)
    out[0] = Rat(1)
    for q in range(1, K + 1):
        k = q * (r + 1)
        if k <= N:
            out[k] = (Rat(C) / r) ** q * prod[q]
    return out


def _alternate(f):
    from .series import LaurentSeries

    return LaurentSeries(
        f.valuation,
        [c * sign_pow(f.valuation + idx) for idx, c in enumerate(f.coeffs)],
        f.trunc_order,
    )


def exp_pairing_residue(P: PsiDOp, Q: PsiDOp):
    """res_z P(e^{xz}) Q(e^{-xz}) dz as a polynomial in x.

    P(e^{xz}) = sum_k p_k(x) z^k e^{xz}, so the z-residue of the product is
    sum_{k+j=-1} (-1)^j p_k(x) q_j(x); equals res(P o Q*) termwise.
    """
    out = ()
    for k, pk in P.terms.items():
        qj = Q.terms.get(-1 - k)
        if qj:
            out = _padd(out, _pscale(_pmul(pk, qj), sign_pow(-1 - k)))
    return list(out)
