"""Dense univariate polynomials over Q and exact evaluation at radicals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZero, MixedFields
from .exact import QuadExt, Radical, sign_of, to_rational


class Polynomial:
    """Coefficients in ascending order; index ``i`` holds the coefficient of ``x**i``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [to_rational(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> Polynomial:
        return cls([0] * exp + [coeff])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    @staticmethod
    def _lift(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self), len(other))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self or not other:
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> Polynomial:
        c = to_rational(c)
        return Polynomial(c * a for a in self._coeffs)

    def monic(self) -> Polynomial:
        if not self:
            raise DivisionByZero("the zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def __divmod__(self, other: Polynomial):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self._coeffs)
        q = [Fraction(0)] * max(len(self) - len(other) + 1, 0)
        lead = other.leading
        for shift in range(len(q) - 1, -1, -1):
            c = rem[shift + other.degree] / lead
            q[shift] = c
            if c:
                for j, b in enumerate(other._coeffs):
                    rem[shift + j] -= c * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at a rational or quadratic-field point."""
        acc = QuadExt(0) if isinstance(x, QuadExt) else Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def is_even(self) -> bool:
        return all(c == 0 for c in self._coeffs[1::2])

    def render(self, var: str = "x") -> str:
        return render_terms([(c, i) for i, c in enumerate(self._coeffs)][::-1], var)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"


def _monomial(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


def render_terms(terms: Sequence[tuple], var: str = "x") -> str:
    """Render ``(coefficient, exponent)`` pairs in the given order, without combining.

    Coefficients may be rationals or :class:`QuadExt`; zero terms are skipped.
    Output re-parses with :func:`biquad.parsing.parse_polynomial` when all
    coefficients are rational.
    """
    parts: list[str] = []
    for coeff, exp in terms:
        if isinstance(coeff, QuadExt) and coeff.is_rational:
            coeff = coeff.a
        if not coeff:
            continue
        mono = _monomial(var, exp)
        if isinstance(coeff, QuadExt):
            negative = coeff.a == 0 and coeff.b < 0
            mag = -coeff if negative else coeff
            text = str(mag)
            if mono:
                if mag.a != 0:
                    text = f"({text})"
                text = f"{text}*{mono}"
        else:
            negative = coeff < 0
            mag = abs(coeff)
            if mono:
                text = mono if mag == 1 else f"{mag}{mono}"
            else:
                text = str(mag)
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"{'-' if negative else '+'} {text}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RingValue:
    """``u + v*s`` in ``Q(sqrt(d))[s]/(s^2 - radicand)``.

    ``radicand`` is ``None`` for plain quadratic-field values (``v`` is then 0).
    """

    u: QuadExt
    v: QuadExt = QuadExt(0)
    radicand: QuadExt | None = None

    def _check(self, other: RingValue) -> QuadExt | None:
        if self.radicand is None:
            return other.radicand
        if other.radicand is None or other.radicand == self.radicand:
            return self.radicand
        raise MixedFields("values live in different extension rings")

    def _lift(self, other) -> RingValue:
        if isinstance(other, RingValue):
            return other
        return RingValue(QuadExt.coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        e = self._check(other)
        return RingValue(self.u + other.u, self.v + other.v, e)

    __radd__ = __add__

    def __neg__(self):
        return RingValue(-self.u, -self.v, self.radicand)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        e = self._check(other)
        u = self.u * other.u
        if self.v and other.v:
            u = u + self.v * other.v * e
        v = self.u * other.v + self.v * other.u
        return RingValue(u, v, e)

    __rmul__ = __mul__

    def is_formal_zero(self) -> bool:
        return not self.u and not self.v

    def is_zero(self) -> bool:
        """Whether the real number ``u + v*sqrt(radicand)`` is zero.

        Matches :meth:`is_formal_zero` unless the radicand is a square in its
        own field, where the quotient ring has zero divisors.
        """
        if not self.v:
            return not self.u
        ratio = -self.u / self.v
        return sign_of(ratio) >= 0 and ratio * ratio == self.radicand

    def __bool__(self):
        return not self.is_zero()


def eval_at(p: Polynomial, x) -> RingValue:
    """Evaluate ``p`` exactly at a radical.

    A tier-2 point ``sign*sqrt(e)`` is handled as ``sign*s`` in the quotient
    ring with ``s^2 = e``, so no approximation is involved.
    """
    x = Radical.of(x)
    if x.tier1 is not None:
        return RingValue(p(x.tier1))
    point = RingValue(QuadExt(0), QuadExt(x.sign), x.radicand)
    acc = RingValue(QuadExt(0), QuadExt(0), x.radicand)
    for c in reversed(p.coefficients):
        acc = acc * point + c
    return acc


def is_root(p: Polynomial, x) -> bool:
    return eval_at(p, x).is_zero()
