"""Coefficient families shared by every tau-number formula.

The generating kernels here are all attached to one algebraic curve: the
series w(u) solving  w^{r+1}/(r(r+1)) - w/r + 1/(r+1) = u^2/2,  and the odd
Laurent series X(u) solving  ((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1)) = u^-r.
From them come

* ``c_poly``    -- the triangle c_{p,j}(r) of expansion coefficients of
                   (((1+x)^{r+1} - 1 - (r+1)x) / ((r+1)x))^p / p!,
* ``d_coeff``   -- the closed form for the coefficients of fractional
                   powers of d^r + C x (see :mod:`adetau.psido` for the
                   brute-force oracle it is checked against),
* ``C_coeff``   -- coefficients of (w^{j+1} - 1)/(j+1)  (log w at j = -1),
* ``f_series``  -- sum_k (2k+1)!! C_{2k}(r,j) (-T)^k,
* ``X_series`` / ``Ctilde`` -- the odd Laurent curve and the coefficients
                   of -(X+1)^i (X-1)^j dX/du.

Everything is polynomial in the parameters, so all functions accept
arbitrary rationals for r, i and j.  Results are memoized behind a lock;
tables only ever grow.
"""

from __future__ import annotations

import math
import threading

from .backend import ONE, Rat
from .scalar import gen_binom, odd_double_factorial, poch_desc
from .series import (
    LaurentSeries,
    series_log,
    series_pow_frac,
    solve_algebraic,
    solve_frac_implicit,
)

_lock = threading.Lock()
_c_tables: dict = {}
_w_cache: dict = {}
_C_cache: dict = {}
_genfunc_a_cache: dict = {}
_genfunc_d_cache: dict = {}


def _as_rat(x):
    return x if hasattr(x, "denominator") else Rat(x)


def _is_nonneg_int(x) -> bool:
    return x.denominator == 1 and x.numerator >= 0


# ---------------------------------------------------------------------------
# c_{p,j}(r) and d_{j,s}(lambda, r)


def c_table(r, jmax: int):
    """Triangle c[p][j] for 0 <= p <= j <= jmax (c[p][j] = 0 for p > j)."""
    r = _as_rat(r)
    with _lock:
        cached = _c_tables.get(r)
        if cached is not None and len(cached) > jmax:
            return cached
    # inner series ((1+x)^{r+1} - 1 - (r+1)x)/((r+1)x) = sum_{k>=2} binom(r+1,k)/(r+1) x^{k-1}
    inner = [0] * (jmax + 1)
    for k in range(2, jmax + 2):
        inner[k - 1] = gen_binom(r + 1, k) / (r + 1)
    table = [[0] * (jmax + 1) for _ in range(jmax + 1)]
    table[0][0] = ONE
    power = [ONE] + [0] * jmax
    for p in range(1, jmax + 1):
        nxt = [0] * (jmax + 1)
        for i, a in enumerate(power):
            if not a:
                continue
            for j in range(1, jmax + 1 - i):
                b = inner[j]
                if b:
                    nxt[i + j] = nxt[i + j] + a * b
        power = nxt
        fact = Rat(1, math.factorial(p))
        row = table[p]
        for j in range(p, jmax + 1):
            row[j] = power[j] * fact
    with _lock:
        _c_tables[r] = table
    return table


def c_poly(p: int, j: int, r):
    """c_{p,j}(r): coefficient of x^j in the p-th normalized kernel power."""
    if p > j:
        return Rat(0)
    return c_table(r, j)[p][j]


def d_coeff(lam, r, j: int, s: int):
    """Coefficient polynomial d_{j,s}(lambda, r) of fractional operator powers.

    d_{j,s} = (1/s!) sum_{p=0}^{j} c_{p,j}(r) (lambda)^-_{s+p+j}, where
    (x)^-_n is the descending Pochhammer symbol.
    """
    lam = _as_rat(lam)
    table = c_table(r, j)
    acc = Rat(0)
    pd = poch_desc(lam, s + j)
    for p in range(j + 1):
        c = table[p][j]
        if c:
            acc = acc + c * pd
        pd = pd * (lam - s - j - p)
    return acc / math.factorial(s)


# ---------------------------------------------------------------------------
# the curve w(u) and the C_n(r, j) family


def w_series(r, N: int) -> LaurentSeries:
    """The branch w = 1 + u + ... of w^{r+1}/(r(r+1)) - w/r + 1/(r+1) = u^2/2.

    The equation has a double point at (w, u) = (1, 0); substituting
    w = 1 + u v turns it into a simple-root problem for v, solved by
    Newton iteration.  Known to order N in u.
    """
    r = _as_rat(r)
    if r == 0 or r == -1:
        raise ValueError("the curve degenerates at r = 0 and r = -1")
    key = (r, N)
    with _lock:
        cached = _w_cache.get(r)
        if cached is not None and cached.trunc_order >= N:
            return cached.truncate(N)
    # 2 * Phi(1+s) = sum_{k>=2} 2 binom(r+1,k)/(r(r+1)) s^k = u^2, then s = u v:
    # P(v, u) = sum_k [2 binom(r+1,k)/(r(r+1))] v^k u^{k-2} - 1 = 0, v(0) = 1.
    P = {(0, 0): -ONE}
    for k in range(2, N + 2):
        c = 2 * gen_binom(r + 1, k) / (r * (r + 1))
        if c:
            P[(k, k - 2)] = c
    v = solve_algebraic(P, ONE, max(1, N - 1))
    w = LaurentSeries.constant(ONE, N) + v.shift(1).extend(N)
    with _lock:
        _w_cache[r] = w
    return w


def C_coeff(r, j, n: int):
    """C_n(r, j): coefficient of u^{n+1} in (w^{j+1}-1)/(j+1), log w at j = -1.

    C_{-1} = C_{-2} = 0 by convention.
    """
    if n in (-1, -2):
        return Rat(0)
    if n < -2:
        raise ValueError("n must be >= -2")
    r, j = _as_rat(r), _as_rat(j)
    key = (r, j)
    with _lock:
        cached = _C_cache.get(key)
    if cached is None or len(cached) <= n:
        # grow geometrically so sequences of increasing requests stay linear
        order = max(n + 2, 2 * len(cached or ()), 8)
        w = w_series(r, order + 1)
        if j == -1:
            g = series_log(w, order + 1)
        else:
            wj = series_pow_frac(w, j + 1, order + 1)
            g = (wj - LaurentSeries.constant(ONE, order + 1)).scale(ONE / (j + 1))
        cached = [g[m + 1] for m in range(order)]
        with _lock:
            _C_cache[key] = cached
    return cached[n]


def f_series(r, j, N: int) -> LaurentSeries:
    """f_j(T) = sum_k (2k+1)!! C_{2k}(r, j) (-T)^k, known to order N in T."""
    if N >= 1:
        C_coeff(r, j, 2 * (N - 1))  # prime the cache with one bulk computation
    coeffs = [
        odd_double_factorial(2 * k + 1) * C_coeff(r, j, 2 * k) * (1 if k % 2 == 0 else -1)
        for k in range(N)
    ]
    return LaurentSeries(0, coeffs, N)


# ---------------------------------------------------------------------------
# the odd Laurent curve X(u) and Ctilde


def genfunc_even_series(r, N: int) -> LaurentSeries:
    """Even-variable solution Y(T), Y(0) = 1, of
    sum_j binom(r+1, 2j+1) T^j Y^{r-2j} = r + 1  (T standing for u^2).

    X(u) = Y(u^2)/u is the odd Laurent curve; Y also carries the
    A-family generating coefficients.  Known to order N in T.
    """
    r = _as_rat(r)
    key = (r, N)
    with _lock:
        cached = _genfunc_a_cache.get(r)
        if cached is not None and cached.trunc_order >= N:
            return cached.truncate(N)
    if _is_nonneg_int(r) and r >= 2:
        ri = int(r)
        P = {(0, 0): -(r + 1)}
        for j in range(ri // 2 + 1):
            P[(ri - 2 * j, j)] = gen_binom(r + 1, 2 * j + 1)
        y = solve_algebraic(P, ONE, N)
    else:
        terms = [(LaurentSeries.constant(-(r + 1), N), Rat(0))]
        for j in range(N + 1):
            c = gen_binom(r + 1, 2 * j + 1)
            if c:
                terms.append((LaurentSeries.from_terms({j: c}, N + j + 1), r - 2 * j))
        y = solve_frac_implicit(terms, N)
    with _lock:
        _genfunc_a_cache[r] = y
    return y


def genfunc_even_series_d(r, N: int) -> LaurentSeries:
    """Even-variable solution Y(T), Y(0) = 1, of
    sum_j binom(j + r/2, 2j)/(2j+1) T^j Y^{r-2j} = 1  (T standing for t^2).

    Carries the even-rank family generating coefficients; known to order N.
    """
    r = _as_rat(r)
    with _lock:
        cached = _genfunc_d_cache.get(r)
        if cached is not None and cached.trunc_order >= N:
            return cached.truncate(N)
    if _is_nonneg_int(r) and r.numerator % 2 == 0 and r >= 2:
        ri = int(r)
        P = {(0, 0): -ONE}
        for j in range(ri // 2 + 1):
            P[(ri - 2 * j, j)] = gen_binom(Rat(j) + r / 2, 2 * j) / (2 * j + 1)
        y = solve_algebraic(P, ONE, N)
    else:
        terms = [(LaurentSeries.constant(-ONE, N), Rat(0))]
        for j in range(N + 1):
            c = gen_binom(Rat(j) + r / 2, 2 * j) / (2 * j + 1)
            if c:
                terms.append((LaurentSeries.from_terms({j: c}, N + j + 1), r - 2 * j))
        y = solve_frac_implicit(terms, N)
    with _lock:
        _genfunc_d_cache[r] = y
    return y


def X_series(r, N: int) -> LaurentSeries:
    """Odd Laurent series X = 1/u - (r-1)/6 u + ... with
    ((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1)) = u^{-r}; known to order N in u.
    """
    half = (N + 1) // 2 + 1
    y = genfunc_even_series(r, half)
    terms = {2 * g - 1: y[g] for g in range(half)}
    return LaurentSeries.from_terms({e: c for e, c in terms.items() if e < N}, N)


def Ctilde(r, i, j, n: int):
    """Coefficient of u^{n-i-j-2} in -(X+1)^i (X-1)^j X'(u), i.e. the
    coefficient of u^n in (W+u)^i (W-u)^j (W - u W') with W = u X."""
    return _ctilde_list(r, i, j, n)[n]


def _ctilde_list(r, i, j, nmax: int):
    r, i, j = _as_rat(r), _as_rat(i), _as_rat(j)
    N = max(nmax + 1, 2)
    half = N // 2 + 2
    y = genfunc_even_series(r, half)
    W = LaurentSeries.from_terms({2 * g: y[g] for g in range(half) if 2 * g < N}, N)
    Wp = W.differentiate().truncate(N - 1)
    u = LaurentSeries.from_terms({1: ONE}, N)
    t1 = series_pow_frac(W + u, i, N)
    t2 = series_pow_frac(W - u, j, N)
    t3 = W - Wp.shift(1).extend(N)
    prod = (t1 * t2 * t3).truncate(N)
    return [prod[m] for m in range(nmax + 1)]


def ctilde_series(r, i, j, nmax: int) -> LaurentSeries:
    """All Ctilde_n(r, i, j) for n <= nmax, packed as a series in u."""
    return LaurentSeries(0, _ctilde_list(r, i, j, nmax), nmax + 1)
