"""End-to-end acceptance checks. Each test prints a PASS/FAIL line in the summary."""

import json
import random
import subprocess
import sys
from fractions import Fraction

import mpmath

from biquad import (
    GOLDEN_RATIO,
    Matrix,
    Polynomial,
    QuadExt,
    Radical,
    StepLabel,
    charpoly,
    denest_sqrt,
    equal,
    golden_power,
    is_root,
    nth_root_decimal,
    path_adjacency,
    same_roots,
    solve_biquadratic_perfect_square,
    solve_biquadratic_substitution,
    to_decimal,
)
from biquad.cli import radical_from_json

from oracles import cofactor_charpoly, lucas_fibonacci, mp_truncated, mp_value

F = Fraction
HALF = F(1, 2)
BIQUAD = Polynomial([1, 0, -3, 0, 1])

# roots as (1 +- sqrt 5)/2 and (-1 +- sqrt 5)/2
PHI = Radical.of(QuadExt(HALF, HALF, 5))
NEG_PHI = Radical.of(QuadExt(-HALF, -HALF, 5))
INV_PHI = Radical.of(QuadExt(-HALF, HALF, 5))
NEG_INV_PHI = Radical.of(QuadExt(HALF, -HALF, 5))
FLAT = [PHI, NEG_PHI, INV_PHI, NEG_INV_PHI]

BIG = QuadExt(F(3, 2), HALF, 5)
SMALL = QuadExt(F(3, 2), -HALF, 5)
NESTED = [Radical(sign=1, radicand=BIG), Radical(sign=-1, radicand=BIG),
          Radical(sign=1, radicand=SMALL), Radical(sign=-1, radicand=SMALL)]


def test_path_graph_characteristic_polynomial():
    m = path_adjacency(4)
    assert charpoly(m) == BIQUAD
    assert Polynomial(cofactor_charpoly(m.rows)) == BIQUAD


def test_perfect_square_roots_and_trace():
    sol = solve_biquadratic_perfect_square(-3, 1)
    assert sorted(map(str, sol.roots)) == sorted(map(str, FLAT))
    assert all(r.tier == 1 for r in sol.roots)
    steps = [(s.label, s.lhs, s.rhs) for s in sol.trace]
    assert (StepLabel.PERFECT_SQUARE, "(x^2 - 1)^2", "x^2") in steps
    rewritten = {(s.lhs, s.rhs) for s in sol.trace if s.label is StepLabel.REWRITE}
    assert ("x^2 - x - 1", "0") in rewritten
    assert ("x^2 + x - 1", "0") in rewritten


def test_substitution_roots_stay_nested():
    sol = solve_biquadratic_substitution(-3, 1)
    assert list(sol.roots) == NESTED
    assert all(r.tier == 2 for r in sol.roots)
    formula = [s for s in sol.trace if s.label is StepLabel.QUADRATIC_FORMULA]
    assert len(formula) == 1
    assert formula[0].rhs == f"{BIG}, {SMALL}" == "(3 + sqrt(5))/2, (3 - sqrt(5))/2"


def test_cross_representation_identity():
    # sqrt(BIG) = phi, sqrt(SMALL) = 1/phi
    partner = {0: PHI, 1: NEG_PHI, 2: INV_PHI, 3: NEG_INV_PHI}
    verdicts = [(i, j, equal(n, f)) for i, n in enumerate(NESTED) for j, f in enumerate(FLAT)]
    true_pairs = [(i, j) for i, j, v in verdicts if v]
    assert true_pairs == [(i, FLAT.index(partner[i])) for i in range(4)]
    assert sum(1 for *_, v in verdicts if not v) == 12
    res = denest_sqrt(BIG)
    assert res.denested and res.value == GOLDEN_RATIO == QuadExt(HALF, HALF, 5)
    assert res.value * res.value == BIG


def test_reciprocal_golden_decimal():
    assert to_decimal(QuadExt(-HALF, HALF, 5), 7) == "0.6180339"
    assert mp_truncated(mp_value(-HALF, HALF, 5), 7) == "0.6180339"


def test_golden_nth_root_representations():
    expected = [(1, 1), (3, 1), (4, 2), (7, 3), (11, 5), (18, 8)]
    target = to_decimal(GOLDEN_RATIO, 30)
    with mpmath.workdps(80):
        assert target == mp_truncated((1 + mpmath.sqrt(5)) / 2, 30)
    for n in range(1, 7):
        lucas, fib = lucas_fibonacci(n)
        assert (lucas, fib) == expected[n - 1]
        assert golden_power(n) == QuadExt(F(lucas, 2), F(fib, 2), 5)
        assert nth_root_decimal(golden_power(n), n, 30) == target


def _square_q_case(rng):
    k = F(rng.randint(1, 40), rng.randint(1, 6))
    p = -(2 * k + F(rng.randint(0, 60), rng.randint(1, 6)))
    return p, k * k


def _arbitrary_q_case(rng):
    p = -F(rng.randint(0, 60), rng.randint(1, 6))
    bound = p * p / 4
    q = bound * F(rng.randint(0, 1000), 1000)
    return p, q


def test_random_biquadratic_property_suite():
    rng = random.Random(20240601)
    for _ in range(500):
        p, q = _square_q_case(rng)
        poly = Polynomial([q, 0, p, 0, 1])
        first = solve_biquadratic_perfect_square(p, q)
        second = solve_biquadratic_substitution(p, q)
        assert len(first.roots) == len(second.roots) == 4
        for r in first.roots + second.roots:
            assert is_root(poly, r)
        assert same_roots(first.roots, second.roots)
    for _ in range(500):
        p, q = _arbitrary_q_case(rng)
        poly = Polynomial([q, 0, p, 0, 1])
        sol = solve_biquadratic_substitution(p, q)
        assert len(sol.roots) == 4
        assert all(is_root(poly, r) for r in sol.roots)


def test_faddeev_leverrier_matches_cofactor_expansion():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 5)
        rows = [[F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
        assert charpoly(Matrix(rows)) == Polynomial(cofactor_charpoly(rows))


CLI_EXAMPLES = [
    ["solve", "x^4-3x^2+1=0", "--method", "substitution"],
    ["eig", "0,1,0,0; 1,0,1,0; 0,1,0,1; 0,0,1,0"],
    ["equal", "sqrt((3+sqrt(5))/2)", "(1+sqrt(5))/2"],
]


def _cli(argv):
    done = subprocess.run([sys.executable, "-m", "biquad", *argv], capture_output=True, check=False)
    return done.returncode, done.stdout


def test_cli_examples_deterministic_and_round_trip():
    for argv in CLI_EXAMPLES:
        for fmt in ("text", "json"):
            runs = {_cli([*argv, "--format", fmt]) for _ in range(3)}
            assert len(runs) == 1
            code, out = runs.pop()
            assert code == 0

    code, out = _cli([*CLI_EXAMPLES[0], "--format", "json"])
    got = [radical_from_json(r) for r in json.loads(out)["roots"]]
    assert len(got) == 4 and all(equal(a, b) for a, b in zip(got, NESTED))

    code, out = _cli([*CLI_EXAMPLES[1], "--format", "json"])
    got = [radical_from_json(r) for r in json.loads(out)["roots"]]
    assert same_roots(got, FLAT)

    code, out = _cli(CLI_EXAMPLES[2])
    assert out == b"true\n"
    doc = json.loads(_cli([*CLI_EXAMPLES[2], "--format", "json"])[1])
    assert doc["equal"] is True
    assert equal(radical_from_json(doc["left"]), radical_from_json(doc["right"]))
    assert equal(radical_from_json(doc["left"]), Radical(sign=1, radicand=BIG))
