from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulermgn.algebra import (
    NotDivisibleError,
    Polynomial,
    PowerSeries,
    TruncationError,
    format_rational,
    parse_rational,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, order=None, zero_constant=False):
    order = order or draw(st.integers(1, 7))
    cs = draw(st.lists(fractions, min_size=order, max_size=order))
    if zero_constant:
        cs[0] = Fraction(0)
    return PowerSeries(cs, order)


@st.composite
def series_triple(draw):
    order = draw(st.integers(1, 7))
    return tuple(draw(series(order=order)) for _ in range(3))


polys = st.lists(fractions, max_size=6).map(Polynomial)


def t(order=6):
    return PowerSeries.variable(order)


# --- examples ----------------------------------------------------------------


def test_linearity():
    assert t() + t() == PowerSeries([0, 2], 6)


def test_difference_of_squares():
    assert (1 + t()) * (1 - t()) == PowerSeries([1, 0, -1], 6)


def test_monomial_product_takes_min_order():
    a = PowerSeries.monomial(1, 8)
    b = PowerSeries.monomial(2, 5)
    assert a * b == PowerSeries.monomial(3, 5)
    assert (a * b).order == 5


def test_scalar_multiply_keeps_order():
    assert (t(9) * Fraction(3, 2)).order == 9


def test_compose_with_zero_is_constant_term():
    outer = PowerSeries([1, 1, 1], 5)
    assert outer.compose(PowerSeries.zero(5)) == PowerSeries.constant(1, 5)


def test_compose_identity():
    f = PowerSeries([0, 3, Fraction(-1, 2), 7], 6)
    assert PowerSeries.variable(6).compose(f) == f


def test_compose_rejects_constant_term():
    with pytest.raises(ValueError):
        t().compose(PowerSeries([1, 1], 6))


def test_compose_log_agrees_with_log1p():
    f = PowerSeries([0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(7, 24)], 8)
    mercator = PowerSeries([0] + [Fraction((-1) ** (k - 1), k) for k in range(1, 8)], 8)
    assert mercator.compose(f) == f.log1p()


def test_mercator():
    expected = [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 5)]
    assert t(6).log1p() == PowerSeries(expected, 6)


def test_log1p_zero():
    assert PowerSeries.zero(5).log1p() == PowerSeries.zero(5)


def test_log1p_of_expm1_is_identity():
    assert (t(10).exp() - 1).log1p() == t(10)


def test_log1p_rejects_constant_term():
    with pytest.raises(ValueError):
        PowerSeries([1, 1], 4).log1p()


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        PowerSeries([2], 4).exp()


def test_geometric_series():
    assert (1 - t(7)).reciprocal() == PowerSeries([1] * 7, 7)


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroDivisionError):
        t().reciprocal()


def test_power_rule():
    d = PowerSeries.monomial(3, 6).derivative()
    assert d == PowerSeries.monomial(2, 5, 3)
    assert d.order == 5


def test_reading_past_order_is_an_error():
    s = PowerSeries([1, 2, 3], 3)
    assert s[2] == 3
    with pytest.raises(TruncationError):
        s[3]


def test_unknown_is_not_zero():
    # equal known coefficients but different orders are different series
    assert PowerSeries([1], 3) != PowerSeries([1], 4)
    assert PowerSeries([1], 3).agrees_with(PowerSeries([1], 4))


def test_egf_values():
    assert PowerSeries([1, 1, Fraction(1, 2), Fraction(1, 6)], 4).egf_values() == [1, 1, 1, 1]


def test_self_division():
    q3q = Polynomial([0, -1, 0, 1])
    assert q3q.exact_div(q3q) == Polynomial.constant(1)


def test_m04_count_division():
    q = Polynomial.q()
    num = (q + 1) * q * (q - 1) * (q - 2)
    assert num.exact_div(Polynomial([0, -1, 0, 1])) == q - 2


def test_inexact_division_raises():
    q = Polynomial.q()
    with pytest.raises(NotDivisibleError, match="not divisible"):
        (q * q - 1).exact_div(q - 2)


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        Polynomial([1]).exact_div(Polynomial())


def test_polynomial_normalizes_trailing_zeros():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial([0, 0]).is_zero() and Polynomial().degree == -1


def test_polynomial_evaluation():
    assert Polynomial([-6, 7, -4, 1])(1) == -2


def test_rational_serialization():
    assert format_rational(Fraction(181, 6)) == "181/6"
    assert format_rational(Fraction(-24)) == "-24"
    assert parse_rational("-3/12") == Fraction(-1, 4)
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_immutability():
    s = PowerSeries([1], 2)
    with pytest.raises(AttributeError):
        s.order = 5
    with pytest.raises(AttributeError):
        Polynomial([1]).coeffs = ()


# --- properties --------------------------------------------------------------


@settings(max_examples=100)
@given(series_triple())
def test_series_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(series(zero_constant=True))
def test_exp_log_inverse(f):
    assert f.log1p().exp() == 1 + f
    assert (f.exp() - 1).log1p() == f


@settings(max_examples=100)
@given(series_triple())
def test_product_rule(abc):
    a, b, _ = abc
    if a.order < 2:
        return
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@settings(max_examples=100)
@given(series(zero_constant=False))
def test_reciprocal_inverts(f):
    if f[0] == 0:
        return
    assert f * f.reciprocal() == PowerSeries.constant(1, f.order)


@settings(max_examples=100)
@given(polys, polys)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=100)
@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(fractions, fractions)
def test_rational_exact(x, y):
    assert (x + y) - x == y
    assert parse_rational(format_rational(x)) == x


@settings(max_examples=100)
@given(series(zero_constant=True), series(zero_constant=True))
def test_compose_is_a_ring_map(f, g):
    n = min(f.order, g.order)
    f, g = f.truncate(n), g.truncate(n)
    h = PowerSeries([0, 1, 2, -1], n) if n > 1 else PowerSeries.zero(n)
    assert (f + g).compose(h) == f.compose(h) + g.compose(h)
    assert (f * g).compose(h) == f.compose(h) * g.compose(h)
