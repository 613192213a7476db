import random
from fractions import Fraction

import pytest

from biquad import Polynomial, QuadExt, Radical, path_adjacency
from biquad.errors import (
    DivisionByZero,
    ExponentTooLarge,
    MixedVariables,
    NegativeRadicand,
    NestingTooDeep,
    NonSquare,
    ParseError,
    RaggedRows,
    UnsupportedScope,
)
from biquad.parsing import parse_matrix, parse_polynomial, parse_quadext, parse_radical

F = Fraction


@pytest.mark.parametrize(
    "text, coeffs, var",
    [
        ("x^4 - 3x^2 + 1 = 0", [1, 0, -3, 0, 1], "x"),
        ("x", [0, 1], "x"),
        ("1/2x^2 - 3/2", [F(-3, 2), 0, F(1, 2)], "x"),
        ("λ^4-3λ^2+1=0", [1, 0, -3, 0, 1], "λ"),
        ("  2 * t ^ 2 -2 ", [-2, 0, 2], "t"),
        ("x + x - 2x", [], "x"),
        ("-x^2", [0, 0, -1], "x"),
        ("7", [7], "x"),
        ("x^16", [0] * 16 + [1], "x"),
    ],
)
def test_parse_polynomial(text, coeffs, var):
    parsed = parse_polynomial(text)
    assert parsed.polynomial == Polynomial(coeffs)
    assert parsed.variable_name == var


@pytest.mark.parametrize(
    "text, offset",
    [
        ("x^^2", 2),
        ("", 0),
        ("x^4 - ", 6),
        ("x^2 = 1", 6),
        ("2 3x", 2),
        ("x^2 #", 4),
        ("xy", 0),
        ("3/0x", 0),
        ("x *", 2),
        ("λ + #", 5),
    ],
)
def test_parse_polynomial_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.offset == offset
    assert info.value.exit_code == 1


def test_parse_polynomial_specific_errors():
    with pytest.raises(MixedVariables) as info:
        parse_polynomial("x^2 + y")
    assert info.value.offset == 6
    with pytest.raises(ExponentTooLarge):
        parse_polynomial("x^17")


def test_polynomial_round_trip():
    rng = random.Random(31)
    for _ in range(1000):
        deg = rng.randint(-1, 8)
        coeffs = [F(rng.randint(-30, 30), rng.randint(1, 9)) if rng.random() < 0.7 else F(0) for _ in range(deg + 1)]
        p = Polynomial(coeffs)
        var = rng.choice("xytλ")
        parsed = parse_polynomial(p.render(var))
        assert parsed.polynomial == p
        if p.degree >= 1:
            assert parsed.variable_name == var


def test_parse_matrix_examples():
    assert parse_matrix("0,1,0,0; 1,0,1,0; 0,1,0,1; 0,0,1,0") == path_adjacency(4)
    assert parse_matrix("5").rows == ((5,),)
    assert parse_matrix("1/2 -3; 4 0").rows == ((F(1, 2), -3), (4, 0))


@pytest.mark.parametrize(
    "text, exc",
    [
        ("1,2; 3", RaggedRows),
        ("1,2; 3,4; 5,6", NonSquare),
        ("1,,2; 3,4", ParseError),
        ("1,a; 3,4", ParseError),
        ("", ParseError),
        ("1,2;", ParseError),
        ("1/0", ParseError),
    ],
)
def test_parse_matrix_errors(text, exc):
    with pytest.raises(exc):
        parse_matrix(text)


def test_ragged_offset():
    with pytest.raises(RaggedRows) as info:
        parse_matrix("1,2; 3")
    assert info.value.offset == 4


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1+sqrt(5))/2", Radical.of(QuadExt(F(1, 2), F(1, 2), 5))),
        ("sqrt((3+sqrt(5))/2)", Radical(sign=1, radicand=QuadExt(F(3, 2), F(1, 2), 5))),
        ("-sqrt((3-sqrt(5))/2)", Radical(sign=-1, radicand=QuadExt(F(3, 2), F(-1, 2), 5))),
        ("2sqrt(5)", Radical.of(QuadExt(0, 2, 5))),
        ("sqrt(20)", Radical.of(QuadExt(0, 2, 5))),
        ("sqrt(9/4)", Radical.of(F(3, 2))),
        ("((1+sqrt(5))/2)^2", Radical.of(QuadExt(F(3, 2), F(1, 2), 5))),
        ("3*sqrt(2+sqrt(5))", Radical(sign=1, radicand=QuadExt(18, 9, 5))),
        ("sqrt(2+sqrt(5))/2", Radical(sign=1, radicand=QuadExt(F(1, 2), F(1, 4), 5))),
        ("sqrt(2+sqrt(5))^2", Radical.of(QuadExt(2, 1, 5))),
        ("sqrt(2+sqrt(5)) * sqrt(2-sqrt(5)+2)", Radical(sign=1, radicand=QuadExt(3, 2, 5))),
        ("1/sqrt(2+sqrt(5))", Radical(sign=1, radicand=QuadExt(-2, 1, 5))),
        ("sqrt(2+sqrt(5)) + 0", Radical(sign=1, radicand=QuadExt(2, 1, 5))),
        ("2^-1", Radical.of(F(1, 2))),
    ],
)
def test_parse_radical(text, expected):
    assert parse_radical(text) == expected


@pytest.mark.parametrize(
    "text, exc",
    [
        ("sqrt(sqrt(2+sqrt(5)))", NestingTooDeep),
        ("sqrt(2+sqrt(5)) + 1", UnsupportedScope),
        ("sqrt(5) + sqrt(3)", ArithmeticError),
        ("sqrt(-1)", NegativeRadicand),
        ("1/(sqrt(5)-sqrt(5))", DivisionByZero),
        ("cbrt(2)", ParseError),
        ("(1+2", ParseError),
        ("sqrt 5", ParseError),
        ("1 2", ParseError),
        ("(" * 200 + "1" + ")" * 200, ParseError),
        ("2^17", ExponentTooLarge),
    ],
)
def test_parse_radical_errors(text, exc):
    with pytest.raises(exc):
        parse_radical(text)


def test_parse_quadext():
    assert parse_quadext("3 - sqrt(5)") == QuadExt(3, -1, 5)
    with pytest.raises(UnsupportedScope):
        parse_quadext("sqrt(2+sqrt(5))")


def test_radical_text_round_trip():
    samples = [
        Radical.of(QuadExt(F(-7, 3), F(5, 6), 7)),
        Radical.of(QuadExt(0, F(-3, 2), 5)),
        Radical.of(F(-4, 9)),
        Radical(sign=-1, radicand=QuadExt(F(3, 2), F(-1, 2), 5)),
        Radical(sign=1, radicand=QuadExt(0, 1, 2)),
    ]
    for r in samples:
        assert parse_radical(str(r)) == r
