"""Exact rational arithmetic with validated interval enclosures.

All enclosures use ``fractions.Fraction`` endpoints, so every bound is a
true mathematical statement rather than a floating-point estimate.  The
transcendental helpers (pi, cos, sqrt) return intervals whose width is
controlled by a precision parameter measured in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval: [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: Rational) -> "Interval":
        x = as_fraction(x)
        return Interval(x, x)

    @staticmethod
    def hull(*values: Rational) -> "Interval":
        fs = [as_fraction(v) for v in values]
        return Interval(min(fs), max(fs))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def mag(self) -> Fraction:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x: Rational) -> bool:
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def straddles_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int | None:
        """+1 / -1 when the sign is certified, else None."""
        if self.strictly_positive():
            return 1
        if self.strictly_negative():
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval | Rational") -> "Interval":
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: "Interval | Rational") -> "Interval":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Interval | Rational") -> "Interval":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Interval | Rational") -> "Interval":
        other = _coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: "Interval | Rational") -> "Interval":
        return self * _coerce(other).reciprocal()

    def outward_round(self, prec_bits: int) -> "Interval":
        """Widen to the enclosing interval with denominators 2**prec_bits.

        Keeps Fraction sizes bounded after long interval computations.
        """
        scale = 1 << prec_bits
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return Interval(lo, hi)

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self) -> str:
        if self.is_point:
            return f"Interval({self.lo})"
        return f"Interval({self.lo}, {self.hi})"


def _coerce(x: "Interval | Rational") -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(x)


def ensure_interval(x: "Interval | Rational") -> Interval:
    return _coerce(x)


def _arctan_recip(x: int, prec_bits: int) -> Interval:
    """Enclosure of arctan(1/x) for integer x >= 2 via the alternating series."""
    total = Fraction(0)
    k = 0
    term = Fraction(1, x)
    threshold = Fraction(1, 1 << (prec_bits + 4))
    x2 = x * x
    while term > threshold:
        total += term if k % 2 == 0 else -term
        k += 1
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        if term.denominator > 1 << (prec_bits * 8):
            break
    # alternating series: truncation error bounded by the first omitted term
    return Interval(total - term, total + term)


def pi_interval(prec_bits: int = 96) -> Interval:
    """Rigorous enclosure of pi (Machin: pi = 16 atan(1/5) - 4 atan(1/239))."""
    a = _arctan_recip(5, prec_bits + 8)
    b = _arctan_recip(239, prec_bits + 8)
    return (a * 16 - b * 4).outward_round(prec_bits)


_PI_CACHE: dict[int, Interval] = {}


def _pi(prec_bits: int) -> Interval:
    iv = _PI_CACHE.get(prec_bits)
    if iv is None:
        iv = pi_interval(prec_bits)
        _PI_CACHE[prec_bits] = iv
    return iv


def sqrt_interval(x: Rational, prec_bits: int = 64) -> Interval:
    """Enclosure of sqrt(x) of width at most 2**-prec_bits for x >= 0."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return Interval.point(0)
    n, d = x.numerator, x.denominator
    # sqrt(n/d) = sqrt(n*d)/d; isqrt gives floor of the integer square root
    scale = 1 << prec_bits
    y = math.isqrt(n * d * scale * scale)
    lo = Fraction(y, d * scale)
    hi = Fraction(y + 1, d * scale)
    return Interval(lo, hi)


# cos(2 pi t) is rational exactly at these residues of t mod 1
_EXACT_COS = {
    Fraction(0): Fraction(1),
    Fraction(1, 6): Fraction(1, 2),
    Fraction(1, 4): Fraction(0),
    Fraction(1, 3): Fraction(-1, 2),
    Fraction(1, 2): Fraction(-1),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(3, 4): Fraction(0),
    Fraction(5, 6): Fraction(1, 2),
}


def cos2pi_exact(t: Rational) -> Fraction | None:
    """Exact value of cos(2 pi t) when it is rational, else None."""
    u = as_fraction(t) % 1
    return _EXACT_COS.get(u)


def cos2pi_interval(t: Rational, prec_bits: int = 64) -> Interval:
    """Rigorous enclosure of cos(2 pi t) for rational t."""
    exact = cos2pi_exact(t)
    if exact is not None:
        return Interval.point(exact)
    u = as_fraction(t) % 1
    # fold into [0, 1/4] using cos(2 pi (1-u)) = cos(2 pi u) and
    # cos(2 pi u) = -cos(2 pi (1/2 - u))
    negate = False
    if u > Fraction(1, 2):
        u = 1 - u
    if u > Fraction(1, 4):
        u = Fraction(1, 2) - u
        negate = True
    work = prec_bits + 16
    theta = _pi(work) * (2 * u)          # theta in [0, pi/2]
    theta2 = (theta * theta).outward_round(work)
    # Taylor with Lagrange remainder: |cos x - sum_{k<=m} (-1)^k x^2k/(2k)!|
    # <= x^(2m+2)/(2m+2)!  (valid for all real x)
    m = 12
    acc = Interval.point(0)
    power = Interval.point(1)
    for k in range(m + 1):
        term = power * Fraction((-1) ** k, math.factorial(2 * k))
        acc = (acc + term).outward_round(work)
        power = (power * theta2).outward_round(work)
    rem = power.mag * Fraction(1, math.factorial(2 * m + 2))
    acc = Interval(acc.lo - rem, acc.hi + rem)
    if negate:
        acc = -acc
    lo = max(acc.lo, Fraction(-1))
    hi = min(acc.hi, Fraction(1))
    return Interval(lo, hi).outward_round(prec_bits)


def geometric_sum(c: Rational, r: Rational, start: int) -> Fraction:
    """Sum of c * r**n over n >= start, for |r| < 1."""
    c = as_fraction(c)
    r = as_fraction(r)
    if not abs(r) < 1:
        raise ValueError("geometric ratio must satisfy |r| < 1")
    return c * r**start / (1 - r)


def geometric_abs_tail(c: Rational, r: Rational, start: int) -> Fraction:
    """Sum of |c| * |r|**n over n >= start."""
    return geometric_sum(abs(as_fraction(c)), abs(as_fraction(r)), start)


def alternating_geometric_sum(c: Rational, r: Rational, start: int) -> Fraction:
    """Sum of c * r**n * (-1)**n over n >= start, for |r| < 1."""
    c = as_fraction(c)
    r = as_fraction(r)
    sign = 1 if start % 2 == 0 else -1
    return geometric_sum(sign * c, -r, 0) * r**start
