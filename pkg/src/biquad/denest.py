"""Denesting ``sqrt(a + b*sqrt(d))`` and deciding equality of radicals.

If ``sqrt(a + b*sqrt(d)) = x + y*sqrt(d)`` with rational ``x, y`` then
``x**2 + d*y**2 = a`` and ``2*x*y = b``, so ``x**2`` and ``d*y**2`` are the
roots of ``t**2 - a*t + b**2*d/4``.  Hence such ``x, y`` exist exactly when
``s = sqrt(a**2 - b**2*d)`` is rational and one of ``(a +- s)/2`` is the
square of a rational.

When that test fails, ``sqrt(a + b*sqrt(d))`` does not lie in ``Q(sqrt(d))``.
It cannot lie in another quadratic field either, because its square would
then be in both fields and therefore rational.  So an irreducible tier-2
value has degree 4 over Q and can never equal a tier-1 value; this is what
makes :func:`equal` sound when residual tiers differ.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeRadicand
from .exact import QuadExt, Radical, sign_of, sqrt_rational
from .polynomial import Polynomial


class DenestStatus(enum.Enum):
    DENESTED = "denested"
    IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class DenestResult:
    status: DenestStatus
    value: QuadExt | None = None
    # sqrt(a^2 - b^2 d) when rational, and which of (a + s)/2, (a - s)/2 was a square
    witness_s: Fraction | None = None
    branch: str | None = None

    @property
    def denested(self) -> bool:
        return self.status is DenestStatus.DENESTED


def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    root = sqrt_rational(r).tier1
    return root.a if root.is_rational else None


def denest_sqrt(e) -> DenestResult:
    """Nonnegative square root of ``e`` inside its own field, when one exists."""
    e = QuadExt.coerce(e)
    if sign_of(e) < 0:
        raise NegativeRadicand(f"sqrt of negative value {e}")
    if e.is_rational:
        return DenestResult(DenestStatus.DENESTED, sqrt_rational(e.a).tier1)

    a, b, d = e.a, e.b, e.d
    s = _rational_sqrt(a * a - b * b * d)
    if s is None:
        return DenestResult(DenestStatus.IRREDUCIBLE)
    for branch, half in (("+", (a + s) / 2), ("-", (a - s) / 2)):
        x = _rational_sqrt(half)
        if x:
            y = b / (2 * x)
            value = abs(QuadExt(x, y, d))
            assert value * value == e
            return DenestResult(DenestStatus.DENESTED, value, s, branch)
    return DenestResult(DenestStatus.IRREDUCIBLE, witness_s=s)


def canonicalize(x) -> Radical:
    """Collapse a tier-2 radical to tier 1 when its radicand denests."""
    x = Radical.of(x)
    if x.tier1 is not None:
        return x
    res = denest_sqrt(x.radicand)
    if res.denested:
        return Radical(tier1=res.value if x.sign > 0 else -res.value)
    return x


def equal(x, y) -> bool:
    """Exact value equality of two radicals, across representations."""
    x, y = canonicalize(x), canonicalize(y)
    if x.tier != y.tier:
        return False
    if x.tier == 1:
        return x.tier1 == y.tier1
    return x.sign == y.sign and x.radicand == y.radicand


def same_roots(xs: Sequence, ys: Sequence) -> bool:
    """Multiset equality of two root lists under :func:`equal`."""
    if len(xs) != len(ys):
        return False
    remaining = [canonicalize(y) for y in ys]
    for x in xs:
        for i, y in enumerate(remaining):
            if equal(x, y):
                del remaining[i]
                break
        else:
            return False
    return True


def minimal_polynomial(x) -> Polynomial:
    """Monic minimal polynomial over Q; degree 1, 2 or 4."""
    x = canonicalize(x)
    if x.tier1 is not None:
        a, b, d = x.tier1.a, x.tier1.b, x.tier1.d
        if not b:
            return Polynomial([-a, 1])
        return Polynomial([a * a - b * b * d, -2 * a, 1])
    e = x.radicand
    # (x^2 - a)^2 = b^2 d
    return Polynomial([e.a * e.a - e.b * e.b * e.d, 0, -2 * e.a, 0, 1])
