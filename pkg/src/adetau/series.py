"""Truncated Laurent/Puiseux series arithmetic and series solvers.

A :class:`LaurentSeries` stores finitely many coefficients together with an
explicit truncation order; every operation propagates truncation
pessimistically, so a coefficient you can read is always a coefficient that
is actually known.  On top of the arithmetic sit the solvers the tau-number
pipelines rely on:

* :func:`solve_algebraic` -- Newton iteration with order doubling for a
  simple root of a bivariate polynomial,
* :func:`solve_frac_implicit` -- the same Newton scheme when the unknown
  enters through fractional powers,
* :func:`invert_superpotential` / :func:`invert_superpotential_neg` --
  compositional inversion of a monic Laurent superpotential at infinity,
  including the second, negative-exponent branch of the even-rank family.

Truncation orders are explicit arguments everywhere; there is no global
precision state.
"""

from __future__ import annotations

from .backend import ONE, Rat, rat_from_str, rat_to_str
from .scalar import QuadElem, scalar_sqrt


def _scalar_to_str(c):
    if isinstance(c, QuadElem):
        return str(c)
    if isinstance(c, int):
        return str(c)
    return rat_to_str(c)


def _scalar_from_str(s):
    if s.endswith("*sqrt3"):
        return QuadElem.from_str(s)
    return rat_from_str(s)


def _inv_scalar(c):
    if isinstance(c, QuadElem):
        return c.inverse()
    return ONE / c


def _common_denominator_ints(coeffs):
    """(integer numerators over one common denominator, that denominator).

    Returns None when a coefficient is not plain-rational (quadratic-field
    entries take the generic path).
    """
    import math as _math

    den = 1
    for c in coeffs:
        d = getattr(c, "denominator", None)
        if d is None:
            return None
        den = den * int(d) // _math.gcd(den, int(d))
    return [int(c.numerator) * (den // int(c.denominator)) for c in coeffs], den


def _convolve_rational(a, b, n):
    """Truncated product of rational coefficient lists via one integer
    convolution per output (a single normalization instead of one per
    multiply-add).  None when either list has non-rational entries."""
    na = _common_denominator_ints(a)
    if na is None:
        return None
    nb = _common_denominator_ints(b)
    if nb is None:
        return None
    A, da = na
    B, db = nb
    out = [0] * n
    for i, ai in enumerate(A):
        if not ai or i >= n:
            continue
        lim = min(len(B), n - i)
        for j in range(lim):
            bj = B[j]
            if bj:
                out[i + j] += ai * bj
    D = da * db
    return [Rat(x, D) if x else 0 for x in out]


class LaurentSeries:
    """Finite window of a Laurent series: sum_{v <= n < order} c_n t^n.

    ``coeffs[i]`` holds the coefficient of ``t**(valuation + i)``;
    coefficients of ``t**k`` for ``k >= trunc_order`` are unknown, not
    zero.  After construction ``coeffs`` is normalized to start with a
    nonzero entry (or be empty for a known-zero window).  Instances are
    treated as immutable.
    """

    __slots__ = ("valuation", "coeffs", "trunc_order")

    def __init__(self, valuation: int, coeffs, trunc_order: int):
        coeffs = list(coeffs)
        if trunc_order - valuation != len(coeffs):
            raise ValueError("coeffs must cover exactly [valuation, trunc_order)")
        i = 0
        while i < len(coeffs) and not coeffs[i]:
            i += 1
        self.valuation = valuation + i
        self.coeffs = coeffs[i:]
        self.trunc_order = trunc_order

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, trunc_order: int) -> "LaurentSeries":
        return cls(trunc_order, [], trunc_order)

    @classmethod
    def constant(cls, c, trunc_order: int) -> "LaurentSeries":
        if trunc_order < 1:
            raise ValueError("constant needs trunc_order >= 1")
        return cls(0, [c] + [0] * (trunc_order - 1), trunc_order)

    @classmethod
    def from_terms(cls, terms: dict, trunc_order: int) -> "LaurentSeries":
        """Build from {exponent: coefficient}, all exponents < trunc_order."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(trunc_order)
        v = min(terms)
        if max(terms) >= trunc_order:
            raise ValueError("term exponent beyond trunc_order")
        coeffs = [0] * (trunc_order - v)
        for e, c in terms.items():
            coeffs[e - v] = c
        return cls(v, coeffs, trunc_order)

    # -- inspection ---------------------------------------------------

    def __getitem__(self, n: int):
        """Known coefficient of t**n; raises beyond the truncation order."""
        if n >= self.trunc_order:
            raise IndexError(
                f"coefficient of t^{n} is beyond truncation order {self.trunc_order}"
            )
        if n < self.valuation:
            return 0
        return self.coeffs[n - self.valuation]

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def known_terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.valuation + i, c

    def leading(self):
        return self.coeffs[0] if self.coeffs else 0

    def _effective_val(self) -> int:
        # for truncation tracking a known-zero window acts like t^order * (unknown)
        return self.valuation if self.coeffs else self.trunc_order

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        hi = min(self.trunc_order, other.trunc_order)
        lo = min(self._effective_val(), other._effective_val(), hi)
        return all(self[k] == other[k] for k in range(lo, hi))

    def __repr__(self):
        parts = [f"({c})t^{e}" for e, c in list(self.known_terms())[:6]]
        body = " + ".join(parts) if parts else "0"
        return f"<LaurentSeries {body} + O(t^{self.trunc_order})>"

    # -- ring operations ----------------------------------------------

    def __neg__(self):
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.trunc_order)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.trunc_order, other.trunc_order)
        v = min(self._effective_val(), other._effective_val(), order)
        out = [0] * (order - v)
        for src in (self, other):
            for e, c in src.known_terms():
                if e < order:
                    out[e - v] = out[e - v] + c
        return LaurentSeries(v, out, order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by an exactly-known scalar."""
        if not c:
            return LaurentSeries.zero(self.trunc_order)
        return LaurentSeries(self.valuation, [c * x for x in self.coeffs], self.trunc_order)

    def shift(self, k: int):
        """Multiply by t**k."""
        return LaurentSeries(self.valuation + k, self.coeffs, self.trunc_order + k)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        v1, v2 = self._effective_val(), other._effective_val()
        order = min(self.trunc_order + v2, other.trunc_order + v1)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(order)
        n = order - (v1 + v2)
        a, b = self.coeffs, other.coeffs
        if n >= 48:
            out = _convolve_rational(a, b, n)
            if out is not None:
                return LaurentSeries(v1 + v2, out, order)
        out = [0] * n
        for i, ai in enumerate(a):
            if not ai or i >= n:
                continue
            lim = min(len(b), n - i)
            for j in range(lim):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return LaurentSeries(v1 + v2, out, order)

    def truncate(self, order: int):
        """Forget coefficients at or beyond ``order``."""
        if order >= self.trunc_order:
            return self
        if order <= self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries(self.valuation, self.coeffs[: order - self.valuation], order)

    def extend(self, order: int):
        """Pad with zero coefficients up to ``order`` (asserts them known-zero)."""
        if order <= self.trunc_order:
            return self
        return LaurentSeries(
            self.valuation if self.coeffs else order,
            self.coeffs + [0] * (order - self.trunc_order) if self.coeffs else [],
            order,
        )

    def differentiate(self):
        """d/dt; order drops by one."""
        out = [(self.valuation + i) * c for i, c in enumerate(self.coeffs)]
        return LaurentSeries(self.valuation - 1, out, self.trunc_order - 1)

    def pow_int(self, k: int):
        """Integer power by binary powering (negative k via the inverse)."""
        if k < 0:
            return self.inverse().pow_int(-k)
        if k == 0:
            return LaurentSeries.constant(ONE, max(1, self.trunc_order - self._effective_val()))
        acc = None
        base = self
        while k:
            if k & 1:
                acc = base if acc is None else acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def inverse(self):
        """Multiplicative inverse; the leading coefficient must be a unit."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of known-zero series")
        v = self.valuation
        u = self.coeffs
        n = self.trunc_order - v
        if n >= 96 and _common_denominator_ints(u) is not None:
            return self._inverse_newton()
        inv0 = _inv_scalar(u[0])
        out = [0] * n
        out[0] = inv0
        for m in range(1, n):
            acc = 0
            for k in range(1, min(m, len(u) - 1) + 1):
                if u[k] and out[m - k]:
                    acc = acc + u[k] * out[m - k]
            out[m] = -(inv0 * acc) if acc else 0
        return LaurentSeries(-v, out, n - v)

    def _inverse_newton(self):
        """Inverse by quadratic iteration x -> x (2 - u x), fast-path mults."""
        v = self.valuation
        n = self.trunc_order - v
        unit = self.shift(-v)
        x = LaurentSeries(0, [_inv_scalar(unit.coeffs[0])], 1)
        m = 1
        while m < n:
            m = min(2 * m, n)
            um = unit.truncate(m)
            xl = x.extend(m)
            correction = (xl * (um * xl).truncate(m)).truncate(m)
            x = ((xl + xl) - correction).truncate(m)
        return x.shift(-v)

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    # -- parity, serialization ----------------------------------------

    def even_part(self):
        return LaurentSeries(
            self.valuation,
            [c if (self.valuation + i) % 2 == 0 else 0 for i, c in enumerate(self.coeffs)],
            self.trunc_order,
        )

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e, _ in self.known_terms())

    def is_odd(self) -> bool:
        return all(e % 2 == 1 for e, _ in self.known_terms())

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "trunc_order": self.trunc_order,
            "coeffs": [_scalar_to_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentSeries":
        return cls(
            obj["valuation"],
            [_scalar_from_str(s) for s in obj["coeffs"]],
            obj["trunc_order"],
        )


class PuiseuxSeries:
    """Reindexing wrapper: a Laurent series in t**(1/q).

    ``body`` is a LaurentSeries in w with w**q = t, so the coefficient of
    t**(n/q) sits at body exponent n.  All arithmetic happens on the body.
    """

    __slots__ = ("branch_denominator", "body")

    def __init__(self, branch_denominator: int, body: LaurentSeries):
        if branch_denominator < 1:
            raise ValueError("branch denominator must be >= 1")
        self.branch_denominator = branch_denominator
        self.body = body

    def coeff(self, exponent):
        """Known coefficient of t**exponent."""
        q = self.branch_denominator
        n = exponent * q
        ni = int(n)
        if ni != n:
            raise ValueError("exponent not representable on this branch")
        return self.body[ni]

    def differentiate(self) -> "PuiseuxSeries":
        """d/dt acting on sum c_n t^(n/q)."""
        q = self.branch_denominator
        b = self.body
        out = [(Rat(b.valuation + i) / q) * c for i, c in enumerate(b.coeffs)]
        return PuiseuxSeries(q, LaurentSeries(b.valuation - q, out, b.trunc_order - q))

    def shift_t(self, k: int) -> "PuiseuxSeries":
        """Multiply by t**k (integer k)."""
        return PuiseuxSeries(self.branch_denominator, self.body.shift(k * self.branch_denominator))

    def scale(self, c) -> "PuiseuxSeries":
        return PuiseuxSeries(self.branch_denominator, self.body.scale(c))

    def __add__(self, other):
        if self.branch_denominator != other.branch_denominator:
            raise ValueError("mismatched branch denominators")
        return PuiseuxSeries(self.branch_denominator, self.body + other.body)

    def is_zero(self) -> bool:
        return self.body.is_zero()


# ---------------------------------------------------------------------------
# fractional powers, sqrt, log


def series_pow_frac(f: LaurentSeries, alpha, N: int) -> LaurentSeries:
    """f**alpha for a series with f(0) = 1, known to order N.

    Uses the first-order relation f h' = alpha f' h, an exact O(N^2)
    coefficient recurrence.  For integer alpha this agrees with repeated
    multiplication.
    """
    if f.valuation < 0 or f[0] != 1:
        raise ValueError("series_pow_frac needs a unit constant term f(0) = 1")
    n = min(N, f.trunc_order)
    if alpha == 1:
        return f.truncate(n)
    if alpha == 0:
        return LaurentSeries.constant(ONE, n)
    a = [f[k] for k in range(n)]
    h = [0] * n
    h[0] = ONE
    for m in range(n - 1):
        acc = 0
        for i in range(m + 1):
            if a[i + 1]:
                acc = acc + alpha * (i + 1) * a[i + 1] * h[m - i]
        for i in range(1, m + 1):
            if a[i] and h[m - i + 1]:
                acc = acc - a[i] * (m - i + 1) * h[m - i + 1]
        h[m + 1] = acc / (m + 1) if acc else 0
    return LaurentSeries(0, h, n)


def series_sqrt(f: LaurentSeries, N: int) -> LaurentSeries:
    """Square root with principal leading coefficient; g*g = f to order N.

    The valuation must be even and the leading coefficient a perfect
    square in its own field (rationals, or Q(sqrt3) for QuadElem input).
    """
    if f.is_zero():
        raise ValueError("series_sqrt of known-zero series")
    v = f.valuation
    if v % 2:
        raise ValueError("odd valuation has no series square root")
    c0 = f.leading()
    root = scalar_sqrt(c0)
    if root is None:
        raise ValueError(f"leading coefficient {c0} is not a square in its field")
    unit = f.shift(-v).scale(_inv_scalar(c0))
    g = series_pow_frac(unit, Rat(1, 2), min(N - v // 2, unit.trunc_order))
    return g.scale(root).shift(v // 2)


def series_log(f: LaurentSeries, N: int) -> LaurentSeries:
    """log f for f(0) = 1, via termwise integration of f'/f."""
    if f.valuation < 0 or f[0] != 1:
        raise ValueError("series_log needs f(0) = 1")
    n = min(N, f.trunc_order)
    q = (f.differentiate() * f.inverse()).truncate(n - 1)
    out = {}
    for e, c in q.known_terms():
        out[e + 1] = c / (e + 1)
    return LaurentSeries.from_terms(out, n)


# ---------------------------------------------------------------------------
# Newton solvers


def _group_poly(P: dict, N: int) -> dict:
    """Group {(ydeg, tdeg): c} into {ydeg: LaurentSeries in t}."""
    bydeg = {}
    for (j, k), c in P.items():
        col = bydeg.setdefault(j, {})
        col[k] = col.get(k, 0) + c
    hi = max((max(col) for col in bydeg.values()), default=0)
    order = max(N, hi + 1)
    return {j: LaurentSeries.from_terms(col, order) for j, col in bydeg.items()}


def _eval_poly(cols: dict, y: LaurentSeries, N: int) -> LaurentSeries:
    """Horner evaluation of sum_j c_j(t) y^j, truncated to order N."""
    top = max(cols)
    acc = LaurentSeries.zero(N)
    for j in range(top, -1, -1):
        acc = (acc * y).truncate(N)
        if j in cols:
            acc = acc + cols[j].truncate(N)
    return acc


def _poly_at_origin(cols: dict, y0):
    return sum((cols[j][0] * y0 ** j for j in cols if cols[j][0]), 0)


def solve_algebraic(P: dict, y0, N: int, parity: str = "all") -> LaurentSeries:
    """Unique power-series root y(t) with y(0) = y0 of a bivariate polynomial.

    ``P`` maps (y-degree, t-degree) to a scalar coefficient.  Requires a
    simple root: P(y0, 0) = 0 and dP/dy(y0, 0) != 0.  Newton iteration
    doubles the known order each step; a final pass re-substitutes the
    result and verifies the residual vanishes identically.

    ``parity="even"`` additionally asserts that odd coefficients vanish.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    cols = _group_poly(P, N)
    dcols = {j - 1: s.scale(Rat(j)) for j, s in cols.items() if j >= 1}
    if _poly_at_origin(cols, y0) != 0:
        raise ValueError("y0 is not a root of P(y, 0)")
    if _poly_at_origin(dcols, y0) == 0:
        raise ValueError("degenerate root: dP/dy(y0, 0) = 0")
    y = LaurentSeries.constant(y0, 1)
    n = 1
    while n < N:
        n = min(2 * n, N)
        yn = y.extend(n)
        num = _eval_poly(cols, yn, n)
        den = _eval_poly(dcols, yn, n)
        y = (yn - num * den.inverse()).truncate(n)
    residual = _eval_poly(cols, y.extend(N), N)
    if not residual.is_zero():
        raise ArithmeticError("Newton iteration failed to annihilate the equation")
    if parity == "even" and not y.is_even():
        raise ArithmeticError("parity violation: odd coefficients present")
    return y


def _unit_pow(y: LaurentSeries, alpha, N: int) -> LaurentSeries:
    if hasattr(alpha, "denominator") and alpha.denominator == 1:
        alpha = int(alpha)
    if isinstance(alpha, int):
        return y.pow_int(alpha).truncate(N)
    return series_pow_frac(y, alpha, N)


def solve_frac_implicit(terms, N: int) -> LaurentSeries:
    """Newton solve of sum_i c_i(t) y^{alpha_i} = 0 around y(0) = 1.

    ``terms`` is a list of (c_i, alpha_i) with c_i a LaurentSeries or a
    scalar and alpha_i rational (fractional powers are taken of the unit
    series y).  Requires a simple root at t = 0.
    """
    norm = []
    for c, alpha in terms:
        if not isinstance(c, LaurentSeries):
            c = LaurentSeries.constant(c, N)
        norm.append((c, alpha if hasattr(alpha, "denominator") else Rat(alpha)))

    def G(y, n):
        acc = LaurentSeries.zero(n)
        for c, alpha in norm:
            acc = acc + (c.truncate(n) * _unit_pow(y, alpha, n)).truncate(n)
        return acc

    def dG(y, n):
        acc = LaurentSeries.zero(n)
        for c, alpha in norm:
            if alpha == 0:
                continue
            acc = acc + (c.truncate(n) * _unit_pow(y, alpha - 1, n)).truncate(n).scale(alpha)
        return acc

    if sum((c[0] for c, _ in norm), 0) != 0:
        raise ValueError("y = 1 is not a root at t = 0")
    if sum((c[0] * a for c, a in norm), 0) == 0:
        raise ValueError("degenerate root in fractional-power solve")
    y = LaurentSeries.constant(ONE, 1)
    n = 1
    while n < N:
        n = min(2 * n, N)
        yn = y.extend(n)
        y = (yn - G(yn, n) * dG(yn, n).inverse()).truncate(n)
    if not G(y.extend(N), N).is_zero():
        raise ArithmeticError("fractional-power Newton failed to annihilate the equation")
    return y


# ---------------------------------------------------------------------------
# superpotential inversion


def invert_superpotential(lam: LaurentSeries, r: int, N: int):
    """Coefficients u_1..u_N of the inverse branch at infinity.

    ``lam`` is a Laurent polynomial in p (exponent = series index), monic
    of top degree r.  Solves lam(p(xi)) = xi^r for
    p(xi) = xi + sum_{k>=1} u_k xi^{-k} and returns [u_1, ..., u_N].
    """
    top = max((e for e, _ in lam.known_terms()), default=None)
    if top != r or lam[r] != 1:
        raise ValueError("superpotential must be monic of degree r")
    M = max(0, -lam.valuation)
    # q(w) = p/xi = 1 + sum u_k w^{k+1} solves sum_k a_k q^{k+M} w^{r-k} = q^M
    P = {(M, 0): -ONE}
    for k, a in lam.known_terms():
        key = (k + M, r - k)
        P[key] = P.get(key, 0) + a
    q = solve_algebraic(P, ONE, N + 2)
    return [q[k + 1] for k in range(1, N + 1)]


def invert_superpotential_neg(lam: LaurentSeries, r: int, N: int, sl=None):
    """Coefficients v_0..v_N of the negative-exponent inverse branch.

    For the even-rank superpotential shape ending in (s_l)^2 p^{-2}, the
    second branch of lam(p) = xi^r is p(xi) = sum_m v_m xi^{-m-r/2} with
    v_0 = s_l.  ``sl`` overrides the principal square root of the p^{-2}
    coefficient when the caller knows the intended sign.  Returns
    [v_0, ..., v_N]; identically zero when s_l = 0.
    """
    if r % 2:
        raise ValueError("negative branch needs even r")
    top = max((e for e, _ in lam.known_terms()), default=None)
    if top != r or lam[r] != 1 or lam.valuation < -2:
        raise ValueError("wrong superpotential shape for the negative branch")
    sl2 = lam[-2]
    if sl is None:
        sl = scalar_sqrt(sl2)
        if sl is None:
            raise ValueError("p^-2 coefficient is not a perfect square; pass sl explicitly")
    elif sl * sl != sl2:
        raise ValueError("sl^2 does not match the p^-2 coefficient")
    if not sl:
        if sl2:
            raise ValueError("sl = 0 but the p^-2 coefficient is nonzero")
        return [Rat(0)] * (N + 1)
    # h(w) = sum v_m w^m solves sum_k a_k w^{r(k+2)/2} h^{k+2} = h^2
    P = {(2, 0): -ONE}
    for k, a in lam.known_terms():
        key = (k + 2, r * (k + 2) // 2)
        P[key] = P.get(key, 0) + a
    h = solve_algebraic(P, sl, N + 1)
    return [h[m] for m in range(N + 1)]
