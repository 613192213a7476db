"""Exact arithmetic over Q and real quadratic fields Q(sqrt(d)).

Rationals are :class:`fractions.Fraction`.  A :class:`QuadExt` is an element
``a + b*sqrt(d)`` with ``d`` squarefree; a :class:`Radical` is either such an
element or a signed square root of a nonnegative one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from .errors import (
    DivisionByZero,
    MixedFields,
    NegativeRadicand,
    RadicandTooLarge,
)

Rational = Fraction

# Trial-division bound for squarefree reduction.
TRIAL_DIVISION_BOUND = 10**6

# Stored radicand for elements with no irrational part.
RATIONAL_SENTINEL_D = 2


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or numeric string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=4096)
def square_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree, for ``n >= 1``.

    Primes are removed by trial division while ``p**3 <= rest``; what is left
    then has at most two prime factors, so a perfect-square test finishes the
    job.
    """
    if n < 1:
        raise ValueError("square_split needs a positive integer")
    k, m, rest = 1, 1, n
    p = 2
    while p * p * p <= rest:
        if p > TRIAL_DIVISION_BOUND:
            raise RadicandTooLarge(f"cannot reduce radicand {n}: factor search exceeds {TRIAL_DIVISION_BOUND}")
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                m *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(rest)
    if r * r == rest:
        k *= r
    else:
        m *= rest
    return k, m


@dataclass(frozen=True, eq=False)
class QuadExt:
    """``a + b*sqrt(d)``; stored form is unique per value."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = RATIONAL_SENTINEL_D

    def __post_init__(self):
        a, b, d = to_rational(self.a), to_rational(self.b), self.d
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"radicand must be a positive integer, got {d!r}")
        if b:
            k, d = square_split(d)
            b *= k
            if d == 1:
                a, b = a + b, Fraction(0)
        if not b:
            d = RATIONAL_SENTINEL_D
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def coerce(cls, x) -> QuadExt:
        if isinstance(x, QuadExt):
            return x
        return cls(to_rational(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def compatible(self, other: QuadExt) -> bool:
        return self.is_rational or other.is_rational or self.d == other.d

    def _field(self, other: QuadExt) -> int:
        if not self.compatible(other):
            raise MixedFields(f"Q(sqrt({self.d})) and Q(sqrt({other.d})) are different fields")
        return other.d if self.is_rational else self.d

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadExt(a, b, d)

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadExt:
        n = self.norm()
        if not n:
            raise DivisionByZero("division by zero in a quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        self._field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QuadExt(1, 0, self.d)
        for _ in range(abs(k)):
            result = result * base
        return result

    def sign(self) -> int:
        return sign_of(self)

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __le__(self, other):
        return sign_of(self - other) <= 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    def __ge__(self, other):
        return sign_of(self - other) >= 0

    def __abs__(self):
        return -self if sign_of(self) < 0 else self

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_quadext(self)


def format_quadext(x: QuadExt) -> str:
    """Render as e.g. ``(1 + sqrt(5))/2``, ``2*sqrt(5)``, ``-3/4``."""
    if x.is_rational:
        return str(x.a)
    den = math.lcm(x.a.denominator, x.b.denominator)
    num_a = int(x.a * den)
    num_b = int(x.b * den)
    root = f"sqrt({x.d})"
    mag = abs(num_b)
    surd = root if mag == 1 else f"{mag}*{root}"
    if num_a == 0:
        body = surd if num_b > 0 else f"-{surd}"
        if den == 1:
            return body
        return f"{body}/{den}"
    body = f"{num_a} {'+' if num_b > 0 else '-'} {surd}"
    if den == 1:
        return body
    return f"({body})/{den}"


def sign_of(x) -> int:
    """Exact sign of ``a + b*sqrt(d)`` using rational comparisons only."""
    x = QuadExt.coerce(x)
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # a^2 == b^2 d is impossible for squarefree d >= 2
    return sa if x.a * x.a > x.b * x.b * x.d else sb


@dataclass(frozen=True)
class Radical:
    """Either a quadratic-field element (tier 1) or ``sign*sqrt(radicand)`` (tier 2).

    Tier-2 values are built raw: a radicand that happens to be a perfect
    square in its own field is kept as written.  ``biquad.denest.canonicalize``
    collapses such values.
    """

    tier1: QuadExt | None = None
    sign: int = 1
    radicand: QuadExt | None = None

    def __post_init__(self):
        if (self.tier1 is None) == (self.radicand is None):
            raise ValueError("exactly one of tier1 / radicand must be given")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.radicand is not None:
            if sign_of(self.radicand) < 0:
                raise NegativeRadicand(f"sqrt of negative value {self.radicand}")
            if self.radicand.is_rational:
                raise ValueError("rational radicands are stored as tier 1; use Radical.sqrt_of")
        if self.tier1 is not None and self.sign != 1:
            raise ValueError("tier-1 radicals carry their sign in the field element")

    @classmethod
    def of(cls, x) -> Radical:
        if isinstance(x, Radical):
            return x
        return cls(tier1=QuadExt.coerce(x))

    @classmethod
    def sqrt_of(cls, e, sign: int = 1) -> Radical:
        """``sign*sqrt(e)``; rational ``e`` collapses to tier 1, irrational ``e`` stays nested."""
        e = QuadExt.coerce(e)
        if e.is_rational:
            r = sqrt_rational(e.a).tier1
            return cls(tier1=r if sign > 0 else -r)
        return cls(sign=sign, radicand=e)

    @property
    def tier(self) -> int:
        return 1 if self.tier1 is not None else 2

    def __neg__(self):
        if self.tier1 is not None:
            return Radical(tier1=-self.tier1)
        return Radical(sign=-self.sign, radicand=self.radicand)

    def value_sign(self) -> int:
        if self.tier1 is not None:
            return sign_of(self.tier1)
        return self.sign

    def squared(self) -> QuadExt:
        if self.tier1 is not None:
            return self.tier1 * self.tier1
        return self.radicand

    def __str__(self):
        if self.tier1 is not None:
            return str(self.tier1)
        body = f"sqrt({self.radicand})"
        return body if self.sign > 0 else f"-{body}"

    def __repr__(self):
        if self.tier1 is not None:
            return f"Radical({self.tier1!r})"
        return f"Radical(sign={self.sign}, radicand={self.radicand!r})"


def sqrt_rational(r) -> Radical:
    """Nonnegative square root of a rational as a tier-1 value ``(s/t)*sqrt(d)``."""
    r = to_rational(r)
    if r < 0:
        raise NegativeRadicand(f"sqrt of negative rational {r}")
    if r == 0:
        return Radical(tier1=QuadExt(0))
    # sqrt(n/m) = sqrt(n*m)/m
    n, m = r.numerator, r.denominator
    k, d = square_split(n * m)
    coeff = Fraction(k, m)
    if d == 1:
        return Radical(tier1=QuadExt(coeff))
    return Radical(tier1=QuadExt(0, coeff, d))


def _floor_scaled(x: QuadExt, scale: int) -> int:
    """``floor(x * scale)`` exactly, for a positive integer ``scale``."""
    den = math.lcm(x.a.denominator, x.b.denominator)
    num_a = int(x.a * den) * scale
    num_b = int(x.b * den) * scale
    if num_b == 0:
        surd = 0
    else:
        m = num_b * num_b * x.d
        root = math.isqrt(m)
        if num_b > 0:
            surd = root
        else:
            # -sqrt(m) is never an integer here since d is not a square
            surd = -(root + 1)
    return (num_a + surd) // den


def iroot(m: int, n: int) -> int:
    """Integer ``floor(m ** (1/n))`` for ``m >= 0``."""
    if m < 0 or n < 1:
        raise ValueError("iroot needs m >= 0 and n >= 1")
    if m < 2 or n == 1:
        return m
    x = 1 << -(-m.bit_length() // n)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def _format_scaled(t: int, negative: bool, digits: int) -> str:
    whole, frac = divmod(t, 10**digits)
    return f"{'-' if negative else ''}{whole}.{frac:0{digits}d}"


def truncated_scaled(x, digits: int) -> tuple[int, bool]:
    """``(trunc(|x| * 10**digits), x < 0)`` computed exactly."""
    if digits < 1:
        raise ValueError("digits must be a positive integer")
    scale = 10**digits
    x = x if isinstance(x, Radical) else Radical.of(x)
    if x.tier1 is not None:
        s = sign_of(x.tier1)
        return _floor_scaled(abs(x.tier1), scale), s < 0
    # floor(sqrt(e) * N) = isqrt(floor(e * N^2))
    t = math.isqrt(_floor_scaled(x.radicand, scale * scale))
    return t, x.sign < 0 and bool(x.radicand)


def to_decimal(x, digits: int) -> str:
    """Decimal expansion truncated toward zero after ``digits`` fractional digits.

    Every printed digit is exact.
    """
    t, negative = truncated_scaled(x, digits)
    return _format_scaled(t, negative, digits)


def nth_root_decimal(x, n: int, digits: int) -> str:
    """Truncated decimal of the real positive ``n``-th root of a nonnegative ``x``."""
    x = QuadExt.coerce(x)
    if sign_of(x) < 0:
        raise NegativeRadicand("real root of a negative value")
    if digits < 1:
        raise ValueError("digits must be a positive integer")
    scale = 10**digits
    t = iroot(_floor_scaled(x, scale**n), n)
    return _format_scaled(t, False, digits)
