"""Exact scalars and the combinatorial primitives used throughout.

Provides ascending/descending Pochhammer symbols, generalized binomial
coefficients, integer/fractional part splitting, p-adic valuations,
Bernoulli numbers, and the quadratic ring Q(sqrt(3)) needed by the E6
asymptotics and the Eguchi-Yang superpotential.

All values are immutable and every function is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import ONE, Rat, ZERO, rat_from_str, rat_to_str


def sign_pow(m: int) -> int:
    """(-1)**m, valid for negative m as well."""
    return -1 if m % 2 else 1


def poch_asc(x, n: int):
    """Ascending Pochhammer symbol (x)_n = x (x+1) ... (x+n-1); 1 for n = 0.

    Requires n >= 0.  See :func:`poch_signed` for the reflected extension.
    """
    if n < 0:
        raise ValueError("poch_asc needs n >= 0; use poch_signed")
    out = ONE
    for i in range(n):
        out = out * (x + i)
    return out


def poch_desc(x, n: int):
    """Descending Pochhammer symbol x (x-1) ... (x-n+1); 1 for n = 0."""
    if n < 0:
        raise ValueError("poch_desc needs n >= 0")
    out = ONE
    for i in range(n):
        out = out * (x - i)
    return out


def poch_signed(x, n: int):
    """Ascending Pochhammer extended to negative length.

    For n < 0 uses the standard reflection (x)_n = 1 / (x+n)_{-n}, i.e.
    (x)_{-1} = 1/(x-1).  Needed by renormalizations evaluated at g = 0.
    """
    if n >= 0:
        return poch_asc(x, n)
    return ONE / poch_asc(x + n, -n)


def gen_binom(x, d: int):
    """Generalized binomial coefficient binom(x, d) for rational x."""
    return poch_desc(x, d) / math.factorial(d)


def odd_double_factorial(n: int) -> int:
    """n!! for odd n >= -1 (so 3!! = 3, 5!! = 15, (-1)!! = 1)."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class FracParts:
    """Exact split x = m + A with m integer and A in [0, 1)."""

    m: int
    A: object  # Rat

    def recompose(self):
        return self.m + self.A


def frac_int(numer: int, denom: int) -> FracParts:
    """Integer and fractional parts of numer/denom (floor convention)."""
    if denom <= 0:
        raise ValueError("denominator must be positive")
    m = numer // denom
    return FracParts(m, Rat(numer - m * denom) / Rat(denom))


def padic_val(q, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if q == 0:
        raise ValueError("p-adic valuation of zero is undefined")
    num, den = abs(int(q.numerator)), int(q.denominator)
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


_BERNOULLI_CACHE = [Rat(1)]


def bernoulli(n: int):
    """Bernoulli number B_n (B_1 = -1/2 convention; B_2 = 1/6, B_4 = -1/30).

    Computed by the triangular Akiyama-Tanigawa recurrence, exactly.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_BERNOULLI_CACHE) <= n:
        m = len(_BERNOULLI_CACHE)
        # B_m = -1/(m+1) * sum_{k<m} binom(m+1, k) B_k
        acc = ZERO
        for k in range(m):
            acc = acc + gen_binom(Rat(m + 1), k) * _BERNOULLI_CACHE[k]
        _BERNOULLI_CACHE.append(-acc / (m + 1))
    return _BERNOULLI_CACHE[n]


def rational_sqrt(q):
    """Exact square root of a rational, or None if not a perfect square."""
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Rat(rn) / Rat(rd)
    return None


class QuadElem:
    """Element a + b*sqrt(3) of the real quadratic field Q(sqrt3).

    Exact ring/field arithmetic; rationals embed with b = 0.  Mixed
    arithmetic with ints and backend rationals is supported so series
    code can stay generic over the scalar type.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Rat(a) if not isinstance(a, type(ONE)) else a
        self.b = Rat(b) if not isinstance(b, type(ONE)) else b

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, int) or hasattr(x, "denominator"):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return QuadElem(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of Q(sqrt3)")
        return QuadElem(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElem(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def norm(self):
        """Field norm a^2 - 3 b^2 (multiplicative)."""
        return self.a * self.a - 3 * self.b * self.b

    def conjugate(self):
        return QuadElem(self.a, -self.b)

    def sqrt(self):
        """Square root inside Q(sqrt3) if one exists, else None.

        Solves (x + y sqrt3)^2 = a + b sqrt3: either y = 0 and x^2 = a,
        or x = 0 and 3 y^2 = a (when b = 0); for b != 0, x y = b/2 and
        x^2 + 3 y^2 = a give a quadratic in x^2.
        """
        if self.b == 0:
            x = rational_sqrt(self.a)
            if x is not None:
                return QuadElem(x, 0)
            y2 = self.a / 3
            y = rational_sqrt(y2)
            if y is not None:
                return QuadElem(0, y)
            return None
        # x^2 solves t^2 - a t + 3 (b/2)^2 = 0
        disc = self.a * self.a - 3 * self.b * self.b
        rd = rational_sqrt(disc)
        if rd is None:
            return None
        for t in ((self.a + rd) / 2, (self.a - rd) / 2):
            x = rational_sqrt(t)
            if x is not None and x != 0:
                y = self.b / (2 * x)
                if x * x + 3 * y * y == self.a:
                    return QuadElem(x, y)
        return None

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(3.0)

    def __repr__(self):
        return f"QuadElem({self.a!r}, {self.b!r})"

    def __str__(self):
        return f"{rat_to_str(self.a)}+{rat_to_str(self.b)}*sqrt3"

    @classmethod
    def from_str(cls, s: str) -> "QuadElem":
        body, tail = s.rsplit("+", 1)
        if not tail.endswith("*sqrt3"):
            raise ValueError(f"bad QuadElem literal: {s!r}")
        return cls(rat_from_str(body), rat_from_str(tail[: -len("*sqrt3")]))


def scalar_sqrt(x):
    """Square root in the scalar's own field (Rat or QuadElem), or None."""
    if isinstance(x, QuadElem):
        return x.sqrt()
    return rational_sqrt(x)
