"""Command-line front end.

Verbs::

    solve EQ            solve a linear, quadratic or biquadratic equation
    charpoly MATRIX     monic characteristic polynomial det(xI - M)
    eig MATRIX          characteristic polynomial, then solve it
    denest RADICAL      rewrite sqrt(a + b*sqrt(d)) without nesting, if possible
    equal R1 R2         exact equality of two radical expressions
    golden --n N        the golden ratio as the N-th root of its N-th power
    eval EXPR           canonical form and decimal value of a radical expression

Exit codes: 0 success, 1 malformed input, 2 domain error, 3 unsupported scope.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import __version__
from .denest import denest_sqrt, equal
from .errors import BiquadError, ParseError
from .exact import QuadExt, Radical, to_decimal
from .matrices import charpoly
from .parsing import parse_matrix, parse_polynomial, parse_radical
from .solver import SolutionSet, nth_root_representation, solve_equation, verify_golden_rep

SCHEMA_VERSION = 1
VERBS = ("solve", "charpoly", "eig", "denest", "equal", "golden", "eval")


@dataclass(frozen=True)
class Command:
    verb: str
    args: tuple[str, ...] = ()
    trace: bool = False
    digits: int = 10
    format: str = "text"
    method: str = "auto"
    n: int | None = None


class Outcome(NamedTuple):
    code: int
    stdout: str
    stderr: str


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--trace", action="store_true", help="print the numbered derivation")
    common.add_argument("--digits", type=_positive_int, default=10, help="fractional digits for decimals (default 10)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--method", choices=("auto", "perfect-square", "substitution"), default="auto")

    parser = _ArgumentParser(prog="biquad", description="Exact biquadratic solver and radical denester.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_ArgumentParser)
    sub.add_parser("solve", parents=[common], help="solve an equation").add_argument("equation")
    sub.add_parser("charpoly", parents=[common], help="characteristic polynomial").add_argument("matrix")
    sub.add_parser("eig", parents=[common], help="exact eigenvalues").add_argument("matrix")
    sub.add_parser("denest", parents=[common], help="denest a square root").add_argument("radical")
    p = sub.add_parser("equal", parents=[common], help="compare two radicals")
    p.add_argument("left")
    p.add_argument("right")
    sub.add_parser("golden", parents=[common], help="golden ratio as an n-th root").add_argument("--n", type=_positive_int, required=True)
    sub.add_parser("eval", parents=[common], help="evaluate a radical expression").add_argument("expr")
    return parser


def parse_command(argv: Sequence[str]) -> Command:
    ns = _build_parser().parse_args(list(argv))
    args = tuple(getattr(ns, name) for name in ("equation", "matrix", "radical", "left", "right", "expr") if hasattr(ns, name))
    return Command(ns.verb, args, ns.trace, ns.digits, ns.format, ns.method, getattr(ns, "n", None))


# -- serialization ------------------------------------------------------------

def quadext_to_json(x: QuadExt) -> dict:
    return {"a": str(x.a), "b": str(x.b), "d": x.d}


def radical_to_json(x: Radical, digits: int | None = None) -> dict:
    if x.tier1 is not None:
        out = {"tier": 1, **quadext_to_json(x.tier1)}
    else:
        out = {"tier": 2, "sign": x.sign, "radicand": quadext_to_json(x.radicand)}
    out["text"] = str(x)
    if digits is not None:
        out["decimal"] = to_decimal(x, digits)
    return out


def quadext_from_json(obj: dict) -> QuadExt:
    return QuadExt(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))


def radical_from_json(obj: dict) -> Radical:
    if obj["tier"] == 1:
        return Radical.of(quadext_from_json(obj))
    return Radical(sign=int(obj["sign"]), radicand=quadext_from_json(obj["radicand"]))


def _solution_json(sol: SolutionSet, digits: int) -> dict:
    return {
        "method": sol.method.value,
        "roots": [radical_to_json(r, digits) for r in sol.roots],
        "nonreal": sol.nonreal,
        "trace": [{"step": i, "label": s.label.value, "lhs": s.lhs, "rhs": s.rhs} for i, s in enumerate(sol.trace, 1)],
    }


# -- text rendering -----------------------------------------------------------

def _solution_text(sol: SolutionSet, cmd: Command) -> list[str]:
    lines = [f"method: {sol.method.value}"]
    if cmd.trace:
        lines.append("derivation:")
        width = len(str(len(sol.trace)))
        lines.extend(f"  {i:>{width}}. {step}" for i, step in enumerate(sol.trace, 1))
    lines.append(f"roots ({len(sol.roots)}):")
    texts = [str(r) for r in sol.roots]
    pad = max((len(t) for t in texts), default=0)
    lines.extend(f"  {t:<{pad}}  ~ {to_decimal(r, cmd.digits)}" for t, r in zip(texts, sol.roots))
    if sol.nonreal:
        lines.append(f"({sol.nonreal} non-real roots omitted)")
    return lines


# -- verbs --------------------------------------------------------------------

def _solve(cmd: Command, text: str):
    parsed = parse_polynomial(text)
    var = parsed.variable_name
    sol = solve_equation(parsed.polynomial, cmd.method, var)
    equation = f"{parsed.polynomial.render(var)} = 0"
    if cmd.format == "json":
        return {"verb": "solve", "equation": equation, **_solution_json(sol, cmd.digits)}
    return [f"equation: {equation}", *_solution_text(sol, cmd)]


def _charpoly(cmd: Command, text: str):
    m = parse_matrix(text)
    poly = charpoly(m)
    if cmd.format == "json":
        return {"verb": "charpoly", "n": m.n, "coefficients": [str(c) for c in poly.coefficients], "polynomial": poly.render("x")}
    return [f"det(xI - M) = {poly.render('x')}"]


def _eig(cmd: Command, text: str):
    m = parse_matrix(text)
    poly = charpoly(m)
    sol = solve_equation(poly, cmd.method, "x")
    if cmd.format == "json":
        return {"verb": "eig", "n": m.n, "polynomial": poly.render("x"), **_solution_json(sol, cmd.digits)}
    return [f"det(xI - M) = {poly.render('x')}", *_solution_text(sol, cmd)]


def _denest(cmd: Command, text: str):
    value = parse_radical(text)
    out: dict = {"verb": "denest", "input": radical_to_json(value)}
    if value.tier1 is not None:
        out.update(status="unnested", value=radical_to_json(value, cmd.digits))
        lines = [f"{value} has no nested square root"]
    else:
        res = denest_sqrt(value.radicand)
        out["status"] = res.status.value
        if res.denested:
            result = Radical.of(res.value if value.sign > 0 else -res.value)
            out["value"] = radical_to_json(result, cmd.digits)
            out["witness"] = {"s": str(res.witness_s), "branch": res.branch}
            lines = [f"{value} = {result}"]
            if cmd.trace:
                e = value.radicand
                half = (e.a + res.witness_s) / 2 if res.branch == "+" else (e.a - res.witness_s) / 2
                lines.append(f"  s = sqrt(a^2 - b^2*d) = sqrt({e.a * e.a - e.b * e.b * e.d}) = {res.witness_s}")
                lines.append(f"  (a {res.branch} s)/2 = {half} is a rational square")
        else:
            lines = [f"{value} does not denest over Q(sqrt({value.radicand.d}))"]
            if cmd.trace:
                e = value.radicand
                lines.append(f"  a^2 - b^2*d = {e.a * e.a - e.b * e.b * e.d}")
    return out if cmd.format == "json" else lines


def _equal(cmd: Command, left: str, right: str):
    x, y = parse_radical(left), parse_radical(right)
    result = equal(x, y)
    if cmd.format == "json":
        return {"verb": "equal", "left": radical_to_json(x), "right": radical_to_json(y), "equal": result}
    return ["true" if result else "false"]


def _golden(cmd: Command):
    rep = nth_root_representation(cmd.n)
    check = verify_golden_rep(rep, cmd.digits)
    if cmd.format == "json":
        return {
            "verb": "golden",
            "n": rep.n,
            "inner": quadext_to_json(rep.inner),
            "rendering": rep.rendering,
            "exact": check.exact,
            "agrees": check.agrees,
            "decimal": check.decimal,
        }
    lines = [f"phi^{rep.n} = {rep.inner}", rep.rendering]
    if check.exact:
        lines.append(f"check: exact, {'holds' if check.agrees else 'FAILS'}")
    else:
        verdict = "agrees" if check.agrees else "DISAGREES"
        lines.append(f"check: root ~ {check.decimal} {verdict} with phi to {cmd.digits} digits")
    return lines


def _eval(cmd: Command, text: str):
    value = parse_radical(text)
    if cmd.format == "json":
        return {"verb": "eval", "value": radical_to_json(value, cmd.digits)}
    return [f"value = {value}", f"decimal ~ {to_decimal(value, cmd.digits)}"]


def _read_arg(arg: str, stdin) -> str:
    if arg == "-":
        return stdin.read().strip()
    return arg


def run(cmd: Command, stdin=None) -> Outcome:
    """Execute a parsed command; errors become exit codes and a diagnostic."""
    stdin = stdin if stdin is not None else sys.stdin
    try:
        args = [_read_arg(a, stdin) for a in cmd.args]
        if cmd.verb == "solve":
            result = _solve(cmd, *args)
        elif cmd.verb == "charpoly":
            result = _charpoly(cmd, *args)
        elif cmd.verb == "eig":
            result = _eig(cmd, *args)
        elif cmd.verb == "denest":
            result = _denest(cmd, *args)
        elif cmd.verb == "equal":
            result = _equal(cmd, *args)
        elif cmd.verb == "golden":
            result = _golden(cmd)
        elif cmd.verb == "eval":
            result = _eval(cmd, *args)
        else:
            raise ParseError(f"unknown verb {cmd.verb!r}")
    except BiquadError as exc:
        return Outcome(exc.exit_code, "", f"error: {exc}\n")
    except ZeroDivisionError as exc:
        return Outcome(2, "", f"error: {exc}\n")
    if cmd.format == "json":
        return Outcome(0, json.dumps({"schema": SCHEMA_VERSION, **result}, ensure_ascii=False, indent=2) + "\n", "")
    return Outcome(0, "\n".join(result) + "\n", "")


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        cmd = parse_command(sys.argv[1:] if argv is None else argv)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except SystemExit as exc:
        # --help / --version
        return int(exc.code or 0)
    outcome = run(cmd, stdin)
    stdout.write(outcome.stdout)
    stderr.write(outcome.stderr)
    return outcome.code


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
