"""Exact solvers for quadratic and biquadratic equations, with derivation traces.

Two routes are provided for ``x^4 + p*x^2 + q = 0``:

* perfect-square completion: rewrite as ``(x^2 + alpha)^2 = beta*x^2`` with
  ``alpha**2 = q`` and ``beta = 2*alpha - p``, take square roots of both sides
  and solve the two resulting quadratics;
* substitution: put ``y = x^2``, solve the quadratic in ``y`` and take
  ``x = +-sqrt(y)``, leaving the nested radicals as they are.

The two routes usually print different-looking roots; :mod:`biquad.denest`
decides that they are the same numbers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .denest import denest_sqrt
from .errors import (
    ExponentOutOfRange,
    MixedFields,
    NegativeDiscriminant,
    NegativeEta,
    NoRealRoots,
    NonpositiveSegment,
    NotApplicable,
    UnsupportedDegree,
    UnsupportedScope,
)
from .exact import QuadExt, Radical, nth_root_decimal, sign_of, sqrt_rational, to_decimal, to_rational
from .polynomial import Polynomial, render_terms

GOLDEN_RATIO = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
MAX_GOLDEN_EXPONENT = 64


class Method(enum.Enum):
    PERFECT_SQUARE = "perfect-square"
    SUBSTITUTION = "substitution"
    QUADRATIC = "quadratic"
    DISPATCH = "dispatch"


class StepLabel(enum.Enum):
    REWRITE = "Rewrite"
    PERFECT_SQUARE = "PerfectSquare"
    TAKE_ROOT = "TakeRoot"
    SUBSTITUTE = "Substitute"
    QUADRATIC_FORMULA = "QuadraticFormula"
    BACK_SUBSTITUTE = "BackSubstitute"


@dataclass(frozen=True)
class TraceStep:
    label: StepLabel
    lhs: str
    rhs: str

    def __str__(self):
        return f"[{self.label.value}] {self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class SolutionSet:
    roots: tuple[Radical, ...]
    method: Method
    trace: tuple[TraceStep, ...] = ()
    polynomial: Polynomial | None = None
    # number of roots dropped because they are not real
    nonreal: int = field(default=0)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _join_roots(roots) -> str:
    return ", ".join(str(r) for r in roots)


# -- quadratics ---------------------------------------------------------------

def _quadratic_roots(b: QuadExt, c: QuadExt) -> list[Radical]:
    """Roots of ``x^2 + b*x + c``, larger-branch (``+sqrt``) first."""
    if not b.compatible(c):
        raise MixedFields(f"coefficients {b} and {c} lie in different fields")
    disc = b * b - 4 * c
    if sign_of(disc) < 0:
        raise NegativeDiscriminant(f"discriminant {disc} is negative; complex roots are out of scope")

    res = denest_sqrt(disc)
    if res.denested and res.value.compatible(b):
        w = res.value
        return [Radical.of((-b + w) / 2), Radical.of((-b - w) / 2)]

    if not b:
        # disc/4 == -c, an irrational non-square
        return [Radical.sqrt_of(-c, 1), Radical.sqrt_of(-c, -1)]

    if b.a == 0 and disc.is_rational:
        # roots u*sqrt(d) +- sqrt(t); their squares u^2 d + t +- 2u sqrt(d t)
        # lie in Q(sqrt(d t)), and sqrt(d t) is irrational here
        u, d, t = -b.b / 2, b.d, disc.a / 4
        cross = sqrt_rational(d * t).tier1
        base = u * u * d + t
        su = 1 if u > 0 else -1
        roots = []
        for s in (1, -1):
            if su == s:
                sign = s
            else:
                sign = su if u * u * d > t else s
            roots.append(Radical.sqrt_of(base + 2 * u * s * cross, sign))
        return roots

    raise UnsupportedScope(f"roots of x^2 + ({b})x + ({c}) are not one-level nested radicals")


def solve_quadratic(b, c, var: str = "x") -> SolutionSet:
    """Solve ``x^2 + b*x + c = 0`` over a common real quadratic field."""
    b, c = QuadExt.coerce(b), QuadExt.coerce(c)
    roots = _quadratic_roots(b, c)
    poly = None
    if b.is_rational and c.is_rational:
        poly = Polynomial([c.a, b.a, 1])
    step = TraceStep(StepLabel.QUADRATIC_FORMULA, var, _join_roots(roots))
    return SolutionSet(tuple(roots), Method.QUADRATIC, (step,), poly)


# -- biquadratics -------------------------------------------------------------

def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    root = sqrt_rational(r).tier1
    return root.a if root.is_rational else None


def _biquadratic(p: Fraction, q: Fraction) -> Polynomial:
    return Polynomial([q, 0, p, 0, 1])


def solve_biquadratic_perfect_square(p, q, var: str = "x") -> SolutionSet:
    """Solve ``x^4 + p*x^2 + q = 0`` by completing a perfect square.

    ``alpha`` ranges over ``+-sqrt(q)`` (which must be rational) and must make
    ``beta = 2*alpha - p`` nonnegative.  A choice with rational ``sqrt(beta)``
    wins; ties go to ``alpha = -sqrt(q)``.
    """
    p, q = to_rational(p), to_rational(q)
    root_q = _rational_sqrt(q)
    if root_q is None:
        raise NotApplicable(f"constant term {q} is not the square of a rational")

    choices = []
    for alpha in dict.fromkeys((-root_q, root_q)):
        beta = 2 * alpha - p
        if beta >= 0:
            root_beta = sqrt_rational(beta).tier1
            choices.append((not root_beta.is_rational, alpha, beta, root_beta))
    if not choices:
        raise NotApplicable("no choice of alpha gives a nonnegative right-hand side")
    _, alpha, beta, root_beta = min(choices, key=lambda ch: ch[0])

    poly = _biquadratic(p, q)
    trace = [
        TraceStep(StepLabel.REWRITE, poly.render(var), render_terms([(1, 4), (2 * alpha, 2), (-beta, 2), (alpha * alpha, 0)], var)),
        TraceStep(StepLabel.REWRITE, render_terms([(1, 4), (2 * alpha, 2), (alpha * alpha, 0)], var), render_terms([(beta, 2)], var)),
        TraceStep(StepLabel.PERFECT_SQUARE, f"({render_terms([(1, 2), (alpha, 0)], var)})^2", render_terms([(beta, 2)], var)),
    ]
    side = render_terms([(root_beta, 1)], var)
    trace.append(TraceStep(StepLabel.TAKE_ROOT, render_terms([(1, 2), (alpha, 0)], var), side if side == "0" else f"±{side}"))

    roots: list[Radical] = []
    # x^2 + alpha = +sqrt(beta) x, then = -sqrt(beta) x
    for s in (1, -1):
        b = -s * root_beta
        trace.append(TraceStep(StepLabel.REWRITE, render_terms([(1, 2), (b, 1), (alpha, 0)], var), "0"))
        part = _quadratic_roots(b, QuadExt(alpha))
        trace.append(TraceStep(StepLabel.QUADRATIC_FORMULA, var, _join_roots(part)))
        roots.extend(part)
    return SolutionSet(tuple(roots), Method.PERFECT_SQUARE, tuple(trace), poly)


def _aux_var(var: str) -> str:
    return next(v for v in "yuvwz" if v != var)


def solve_biquadratic_substitution(p, q, var: str = "x") -> SolutionSet:
    """Solve ``x^4 + p*x^2 + q = 0`` through ``y = x^2``; nested roots are not denested.

    Negative values of ``y`` contribute no real roots and are skipped; if both
    are negative, :class:`NegativeEta` is raised.
    """
    p, q = to_rational(p), to_rational(q)
    y = _aux_var(var)
    poly = _biquadratic(p, q)
    trace = [
        TraceStep(StepLabel.SUBSTITUTE, y, f"{var}^2"),
        TraceStep(StepLabel.SUBSTITUTE, Polynomial([q, p, 1]).render(y), "0"),
    ]
    etas = [r.tier1 for r in _quadratic_roots(QuadExt(p), QuadExt(q))]
    trace.append(TraceStep(StepLabel.QUADRATIC_FORMULA, y, _join_roots(etas)))

    roots: list[Radical] = []
    nonreal = 0
    for eta in etas:
        if sign_of(eta) < 0:
            nonreal += 2
            trace.append(TraceStep(StepLabel.BACK_SUBSTITUTE, f"{var}^2", f"{eta} < 0, no real {var}"))
            continue
        pair = [Radical.sqrt_of(eta, 1), Radical.sqrt_of(eta, -1)]
        trace.append(TraceStep(StepLabel.BACK_SUBSTITUTE, var, _join_roots(pair)))
        roots.extend(pair)
    if not roots:
        raise NegativeEta(f"both values of {y} = {var}^2 are negative; no real roots")
    return SolutionSet(tuple(roots), Method.SUBSTITUTION, tuple(trace), poly, nonreal)


def solve_equation(poly: Polynomial, method: str | Method = "auto", var: str = "x") -> SolutionSet:
    """Normalize to monic and dispatch on degree.

    ``method`` selects the quartic route: ``auto`` tries perfect-square
    completion and falls back to substitution when it does not apply.
    """
    if isinstance(method, Method):
        method = method.value
    if method not in ("auto", "perfect-square", "substitution"):
        raise ValueError(f"unknown method {method!r}")
    deg = poly.degree
    if deg not in (1, 2, 4):
        raise UnsupportedDegree(f"degree {deg} is out of scope: only linear, quadratic and biquadratic equations are solved")
    if deg == 4 and not poly.is_even():
        raise UnsupportedDegree("general quartics are out of scope: only biquadratics (no odd powers) are solved")

    monic = poly.monic()
    prefix: tuple[TraceStep, ...] = ()
    if monic != poly:
        prefix = (TraceStep(StepLabel.REWRITE, poly.render(var), monic.render(var)),)

    if deg == 1:
        root = Radical.of(-monic.coeff(0))
        step = TraceStep(StepLabel.REWRITE, var, str(root))
        return SolutionSet((root,), Method.DISPATCH, prefix + (step,), poly)

    if deg == 2:
        res = solve_quadratic(monic.coeff(1), monic.coeff(0), var)
        prefix += (TraceStep(StepLabel.REWRITE, monic.render(var), "0"),)
        return SolutionSet(res.roots, res.method, prefix + res.trace, poly)

    p, q = monic.coeff(2), monic.coeff(0)
    if method == "substitution":
        res = solve_biquadratic_substitution(p, q, var)
    elif method == "perfect-square":
        res = solve_biquadratic_perfect_square(p, q, var)
    else:
        try:
            res = solve_biquadratic_perfect_square(p, q, var)
        except (NotApplicable, NoRealRoots, UnsupportedScope):
            res = solve_biquadratic_substitution(p, q, var)
    return SolutionSet(res.roots, res.method, prefix + res.trace, poly, res.nonreal)


# -- golden ratio -------------------------------------------------------------

def golden_section_trace(a) -> tuple[Radical, tuple[TraceStep, ...]]:
    """Cut a segment of length ``a`` so that whole : larger = larger : smaller."""
    a = to_rational(a)
    if a <= 0:
        raise NonpositiveSegment(f"segment length must be positive, got {a}")
    roots = _quadratic_roots(QuadExt(a), QuadExt(-a * a))
    x = next(r.tier1 for r in roots if sign_of(r.tier1) > 0)
    rest = a - x
    if sign_of(x - rest) <= 0:
        raise AssertionError("larger part is not larger")
    if a * rest != x * x:
        raise AssertionError("ratio identity fails")
    trace = (
        TraceStep(StepLabel.REWRITE, f"(x + {a})x", f"{a * a}"),
        TraceStep(StepLabel.REWRITE, render_terms([(1, 2), (a, 1), (-a * a, 0)]), "0"),
        TraceStep(StepLabel.QUADRATIC_FORMULA, "x", _join_roots(roots)),
        TraceStep(StepLabel.REWRITE, f"{a}/({x})", f"({x})/({rest})"),
    )
    return Radical.of(x), trace


def golden_section(a) -> Radical:
    """Positive root of ``(x + a)*x = a**2``, i.e. ``a*(sqrt(5) - 1)/2``."""
    return golden_section_trace(a)[0]


def _check_exponent(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_GOLDEN_EXPONENT:
        raise ExponentOutOfRange(f"exponent {n!r} outside 1..{MAX_GOLDEN_EXPONENT}")


def golden_power(n: int) -> QuadExt:
    _check_exponent(n)
    result = GOLDEN_RATIO
    for _ in range(n - 1):
        result = result * GOLDEN_RATIO
    return result


@dataclass(frozen=True)
class GoldenRep:
    """The golden ratio written as the real ``n``-th root of its ``n``-th power."""

    n: int
    inner: QuadExt

    @property
    def rendering(self) -> str:
        if self.n == 1:
            body = str(self.inner)
        elif self.n == 2:
            body = f"sqrt({self.inner})"
        else:
            body = f"root({self.n}, {self.inner})"
        return f"phi = {body}"

    def __str__(self):
        return self.rendering


def nth_root_representation(n: int) -> GoldenRep:
    return GoldenRep(n, golden_power(n))


@dataclass(frozen=True)
class GoldenCheck:
    exact: bool
    agrees: bool
    decimal: str


def verify_golden_rep(rep: GoldenRep, digits: int = 10) -> GoldenCheck:
    """Exact check for ``n <= 2`` (denesting for ``n = 2``), decimal agreement otherwise."""
    target = to_decimal(GOLDEN_RATIO, digits)
    if rep.n == 1:
        return GoldenCheck(True, rep.inner == GOLDEN_RATIO, target)
    if rep.n == 2:
        res = denest_sqrt(rep.inner)
        return GoldenCheck(True, res.denested and res.value == GOLDEN_RATIO, target)
    got = nth_root_decimal(rep.inner, rep.n, digits)
    return GoldenCheck(False, got == target, got)
