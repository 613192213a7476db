"""Recursive-descent parsers for polynomial equations, matrices and radical expressions.

Error offsets are byte offsets into the UTF-8 encoding of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    ExponentTooLarge,
    MixedFields,
    MixedVariables,
    NegativeRadicand,
    NestingTooDeep,
    ParseError,
    RaggedRows,
    UnsupportedScope,
)
from .exact import QuadExt, Radical, sign_of
from .matrices import Matrix
from .polynomial import Polynomial

MAX_EXPONENT = 16
MAX_DEPTH = 64


@dataclass(frozen=True)
class ParsedEquation:
    polynomial: Polynomial
    variable_name: str = "x"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def error(self, message: str, pos: int | None = None, cls=ParseError):
        return cls(message, self.offset(pos))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.take(ch):
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise self.error(f"expected a number, found {found!r}")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]


# -- polynomials --------------------------------------------------------------

def parse_polynomial(text: str) -> ParsedEquation:
    """Parse e.g. ``"x^4 - 3x^2 + 1 = 0"`` or ``"1/2x^2 - 3/2"``.

    Terms are ``[+-][coef][*][var[^exp]]`` with integer or ``p/q``
    coefficients and a single variable letter throughout.
    """
    sc = _Scanner(text)
    coeffs: dict[int, Fraction] = {}
    var: str | None = None

    if sc.at_end():
        raise sc.error("empty equation")
    first = True
    while True:
        sign = 1
        ch = sc.peek()
        if ch in "+-":
            sc.pos += 1
            sign = -1 if ch == "-" else 1
        elif not first:
            raise sc.error(f"expected '+' or '-', found {ch!r}")
        first = False

        start = sc.pos
        coeff: Fraction | None = None
        if sc.peek().isdigit():
            num = sc.integer()
            den = 1
            if sc.take("/"):
                den = sc.integer()
                if den == 0:
                    raise sc.error("zero denominator", start)
            coeff = Fraction(num, den)
        had_star = sc.take("*")
        exp = 0
        ch = sc.peek()
        if ch.isalpha():
            vpos = sc.pos
            name = sc.word()
            if len(name) != 1:
                raise sc.error(f"variable must be a single letter, found {name!r}", vpos)
            if var is None:
                var = name
            elif name != var:
                raise sc.error(f"mixed variables {var!r} and {name!r}", vpos, MixedVariables)
            exp = 1
            if sc.take("^"):
                epos = sc.pos
                exp = sc.integer()
                if exp > MAX_EXPONENT:
                    raise sc.error(f"exponent {exp} exceeds {MAX_EXPONENT}", epos, ExponentTooLarge)
        elif had_star or coeff is None:
            found = ch or "end of input"
            raise sc.error(f"expected a term, found {found!r}", sc.pos if ch else None)
        if coeff is None:
            coeff = Fraction(1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff

        ch = sc.peek()
        if ch == "" or ch == "=":
            break
    if sc.take("="):
        sc.skip_ws()
        zpos = sc.pos
        if sc.at_end() or sc.integer() != 0:
            raise sc.error("only '= 0' is supported on the right-hand side", zpos)
    if not sc.at_end():
        raise sc.error(f"unexpected {sc.peek()!r}")

    top = max(coeffs)
    poly = Polynomial([coeffs.get(i, 0) for i in range(top + 1)])
    return ParsedEquation(poly, var or "x")


# -- matrices -----------------------------------------------------------------

def _parse_entry(token: str, pos: int, sc: _Scanner) -> Fraction:
    body = token[1:] if token[:1] in "+-" else token
    num, slash, den = body.partition("/")
    if not num.isascii() or not num.isdigit() or (slash and not (den.isascii() and den.isdigit())):
        raise sc.error(f"bad matrix entry {token!r}", pos)
    if slash and int(den) == 0:
        raise sc.error("zero denominator", pos)
    value = Fraction(int(num), int(den) if slash else 1)
    return -value if token[0] == "-" else value


def parse_matrix(text: str) -> Matrix:
    """Rows separated by ``;``, entries by ``,`` or whitespace."""
    sc = _Scanner(text)
    rows: list[list[Fraction]] = []
    row_starts: list[int] = []
    i = 0
    n = len(text)
    while True:
        row: list[Fraction] = []
        row_start = i
        expect_entry = True
        while i < n and text[i] != ";":
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch == ",":
                if expect_entry:
                    raise sc.error("empty matrix entry", i)
                expect_entry = True
                i += 1
                continue
            start = i
            while i < n and not text[i].isspace() and text[i] not in ",;":
                i += 1
            row.append(_parse_entry(text[start:i], start, sc))
            expect_entry = False
        if not row:
            raise sc.error("empty matrix row", row_start)
        if expect_entry:
            raise sc.error("trailing ',' in matrix row", i)
        rows.append(row)
        row_starts.append(row_start)
        if i >= n:
            break
        i += 1
    width = len(rows[0])
    for r, start in zip(rows, row_starts):
        if len(r) != width:
            raise sc.error(f"row has {len(r)} entries, expected {width}", start, RaggedRows)
    return Matrix(rows)


# -- radical expressions ------------------------------------------------------

def _scope(msg: str) -> UnsupportedScope:
    return UnsupportedScope(f"{msg}: value is not a one-level nested radical")


def radical_add(x: Radical, y: Radical) -> Radical:
    if x.tier1 is not None and y.tier1 is not None:
        return Radical.of(x.tier1 + y.tier1)
    if x.tier1 is not None and not x.tier1:
        return y
    if y.tier1 is not None and not y.tier1:
        return x
    raise _scope("sum of a nested radical with another term")


def radical_mul(x: Radical, y: Radical) -> Radical:
    if x.tier1 is not None and y.tier1 is not None:
        return Radical.of(x.tier1 * y.tier1)
    if x.tier1 is not None:
        x, y = y, x
    if y.tier1 is not None:
        w = y.tier1
        if not w:
            return Radical.of(0)
        if not w.compatible(x.radicand):
            raise _scope("product across different quadratic fields")
        # w * s*sqrt(e) = sign(w)*s*sqrt(w^2 e)
        return Radical.sqrt_of(w * w * x.radicand, x.sign * sign_of(w))
    if not x.radicand.compatible(y.radicand):
        raise _scope("product across different quadratic fields")
    if x.radicand == y.radicand:
        return Radical.of(x.sign * y.sign * x.radicand)
    return Radical.sqrt_of(x.radicand * y.radicand, x.sign * y.sign)


def radical_inverse(x: Radical) -> Radical:
    if x.tier1 is not None:
        return Radical.of(x.tier1.inverse())
    return Radical.sqrt_of(x.radicand.inverse(), x.sign)


def radical_sqrt(x: Radical) -> Radical:
    if x.tier1 is None:
        raise NestingTooDeep("square roots nested more than one level are out of scope")
    if sign_of(x.tier1) < 0:
        raise NegativeRadicand(f"sqrt of negative value {x.tier1}")
    return Radical.sqrt_of(x.tier1)


def radical_pow(x: Radical, k: int) -> Radical:
    if k < 0:
        x, k = radical_inverse(x), -k
    result = Radical.of(1)
    for _ in range(k):
        result = radical_mul(result, x)
    return result


class _RadicalParser:
    """
    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | implicit-product)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] integer)?
    atom   := integer | 'sqrt' '(' expr ')' | '(' expr ')'
    """

    def __init__(self, text: str):
        self.sc = _Scanner(text)
        self.depth = 0

    def parse(self) -> Radical:
        if self.sc.at_end():
            raise self.sc.error("empty expression")
        value = self.expr()
        if not self.sc.at_end():
            raise self.sc.error(f"unexpected {self.sc.peek()!r}")
        return value

    def _guard(self, pos: int, fn, *args):
        try:
            return fn(*args)
        except (UnsupportedScope, MixedFields, NegativeRadicand, DivisionByZero) as exc:
            exc.args = (f"{exc.args[0]} (at byte offset {self.sc.offset(pos)})",)
            raise

    def expr(self) -> Radical:
        value = self.term()
        while self.sc.peek() in ("+", "-"):
            pos = self.sc.pos
            op = self.sc.text[pos]
            self.sc.pos += 1
            rhs = self.term()
            if op == "-":
                rhs = -rhs
            value = self._guard(pos, radical_add, value, rhs)
        return value

    def term(self) -> Radical:
        value = self.unary()
        while True:
            ch = self.sc.peek()
            pos = self.sc.pos
            if ch == "*":
                self.sc.pos += 1
                value = self._guard(pos, radical_mul, value, self.unary())
            elif ch == "/":
                self.sc.pos += 1
                rhs = self.unary()
                value = self._guard(pos, lambda a, b: radical_mul(a, radical_inverse(b)), value, rhs)
            elif ch == "(" or ch.isalpha():
                value = self._guard(pos, radical_mul, value, self.power())
            else:
                return value

    def unary(self) -> Radical:
        ch = self.sc.peek()
        if ch in ("+", "-"):
            self.sc.pos += 1
            self._enter()
            value = self.unary()
            self.depth -= 1
            return -value if ch == "-" else value
        return self.power()

    def power(self) -> Radical:
        value = self.atom()
        if self.sc.peek() == "^":
            pos = self.sc.pos
            self.sc.pos += 1
            neg = self.sc.take("-")
            epos = self.sc.pos
            k = self.sc.integer()
            if k > MAX_EXPONENT:
                raise self.sc.error(f"exponent {k} exceeds {MAX_EXPONENT}", epos, ExponentTooLarge)
            value = self._guard(pos, radical_pow, value, -k if neg else k)
        return value

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.sc.error("expression nested too deeply")

    def atom(self) -> Radical:
        ch = self.sc.peek()
        pos = self.sc.pos
        if ch.isdigit():
            return Radical.of(self.sc.integer())
        if ch == "(":
            self.sc.pos += 1
            self._enter()
            value = self.expr()
            self.depth -= 1
            self.sc.expect(")")
            return value
        if ch.isalpha():
            name = self.sc.word()
            if name != "sqrt":
                raise self.sc.error(f"unknown name {name!r}", pos)
            self.sc.expect("(")
            self._enter()
            inner = self.expr()
            self.depth -= 1
            self.sc.expect(")")
            return self._guard(pos, radical_sqrt, inner)
        found = ch or "end of input"
        raise self.sc.error(f"expected a number, '(' or 'sqrt', found {found!r}", pos if ch else None)


def parse_radical(text: str) -> Radical:
    """Evaluate an expression such as ``"sqrt((3+sqrt(5))/2)"`` to an exact radical.

    Nested square roots are kept as written (not denested).
    """
    return _RadicalParser(text).parse()


def parse_quadext(text: str) -> QuadExt:
    value = parse_radical(text)
    if value.tier1 is None:
        raise UnsupportedScope(f"{text!r} is a nested radical, expected an element of Q(sqrt(d))")
    return value.tier1
