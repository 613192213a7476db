from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biquad import Polynomial, QuadExt, Radical, eval_at, is_root
from biquad.denest import canonicalize
from biquad.polynomial import RingValue, render_terms

from strategies import radicals, rationals

F = Fraction
X = Polynomial.x()
BIQUAD = Polynomial([1, 0, -3, 0, 1])

polys = st.lists(rationals, max_size=5).map(Polynomial)


def test_normalization():
    assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert Polynomial([0, 0]).degree == -1
    assert not Polynomial()
    assert Polynomial([0, 0, 3]).degree == 2


def test_perfect_square_expansion():
    assert (X**2 - 1) ** 2 == Polynomial([1, 0, -2, 0, 1])


def test_factorization_product():
    # hand expansion: x^4 + x^3 - x^2 - x^3 - x^2 + x - x^2 - x + 1
    assert (X**2 - X - 1) * (X**2 + X - 1) == BIQUAD


def test_additive_identity():
    assert BIQUAD + Polynomial() == BIQUAD


def test_scale_and_monic():
    p = Polynomial([-2, 0, 2])
    assert p.scale(F(1, 2)) == Polynomial([-1, 0, 1])
    assert p.monic() == Polynomial([-1, 0, 1])


def test_divmod():
    q, r = divmod(BIQUAD, X**2 - X - 1)
    assert q == X**2 + X - 1 and not r
    q, r = divmod(X**3 + 1, X - 2)
    assert q * (X - 2) + r == X**3 + 1
    assert r.degree < 1


def test_render():
    assert BIQUAD.render("x") == "x^4 - 3x^2 + 1"
    assert Polynomial([F(-3, 2), 0, F(1, 2)]).render("t") == "1/2t^2 - 3/2"
    assert Polynomial().render() == "0"
    assert Polynomial([0, -1]).render() == "-x"
    assert render_terms([(1, 4), (-2, 2), (-1, 2), (1, 0)]) == "x^4 - 2x^2 - x^2 + 1"
    assert render_terms([(1, 2), (QuadExt(0, -2, 2), 1), (-1, 0)]) == "x^2 - 2*sqrt(2)*x - 1"


def test_eval_examples():
    golden = QuadExt(F(1, 2), F(1, 2), 5)
    assert eval_at(BIQUAD, golden).is_zero()
    nested = Radical(sign=1, radicand=QuadExt(F(3, 2), F(1, 2), 5))
    value = eval_at(BIQUAD, nested)
    assert (value.u, value.v) == (QuadExt(0), QuadExt(0))
    assert eval_at(X, 0).is_zero()


def test_is_root_examples():
    assert is_root(BIQUAD, QuadExt(F(1, 2), F(-1, 2), 5))
    assert is_root(Polynomial([1, -3, 1]), QuadExt(F(3, 2), F(1, 2), 5))
    assert not is_root(Polynomial([1, 0, 1]), 1)


def test_nested_point_not_a_root():
    x = Radical(sign=1, radicand=QuadExt(2, 1, 5))
    assert not is_root(BIQUAD, x)
    assert is_root(Polynomial([-1, 0, -4, 0, 1]), x)


@given(polys, polys, radicals())
def test_eval_is_ring_homomorphism(p, q, x):
    assert eval_at(p * q, x) == eval_at(p, x) * eval_at(q, x)
    assert eval_at(p + q, x) == eval_at(p, x) + eval_at(q, x)


@given(polys)
def test_nested_and_denested_evaluation_agree(p):
    e = QuadExt(F(3, 2), F(1, 2), 5)
    for sign in (1, -1):
        nested = Radical(sign=sign, radicand=e)
        flat = canonicalize(nested)
        assert flat.tier == 1
        via_ring = eval_at(p, nested)
        # s = sqrt(e) = |flat|
        s = flat.tier1 if sign > 0 else -flat.tier1
        assert eval_at(p, flat).u == via_ring.u + via_ring.v * s


def test_zero_at_square_radicand():
    # sqrt(70 + 30 sqrt 5) = 5 + 3 sqrt 5 is a root of x^2 - 10x - 20
    x = Radical(sign=1, radicand=QuadExt(70, 30, 5))
    value = eval_at(Polynomial([-20, -10, 1]), x)
    assert not value.is_formal_zero()
    assert value.is_zero()
    assert not eval_at(Polynomial([-20, -10, 1]), -x).is_zero()


def test_ring_rejects_different_radicands():
    a = RingValue(QuadExt(1), QuadExt(1), QuadExt(2, 1, 5))
    b = RingValue(QuadExt(1), QuadExt(1), QuadExt(3, 1, 5))
    with pytest.raises(ArithmeticError):
        a * b
