from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classalg.series import HbarSeries, SeriesError

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_strategy(order=5):
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(
        lambda cs: HbarSeries(0, cs, order)
    )


def test_constructors():
    s = HbarSeries.const(Fraction(3), 4)
    assert s.coeff(0) == 3
    assert s.coeff(4) == 0
    assert HbarSeries.zero(3).is_zero()
    h2 = HbarSeries.hbar_power(2, 5)
    assert h2.coeff(2) == 1 and h2.coeff(1) == 0


def test_exp_identity():
    order = 8
    e = HbarSeries.exp_hbar(1, order)
    em = HbarSeries.exp_hbar(-1, order)
    assert e * em == HbarSeries.const(Fraction(1), order)
    # exp(2h) = exp(h)^2
    assert HbarSeries.exp_hbar(2, order) == e * e


def test_coeff_window():
    s = HbarSeries.const(Fraction(1), 3)
    with pytest.raises(SeriesError):
        s.coeff(4)


def test_pole_bound():
    with pytest.raises(SeriesError):
        HbarSeries(-3, [1, 0, 0, 0, 0, 0], 2)
    # pole of order 2 is allowed
    s = HbarSeries(-2, [1, 0, 0, 0, 0], 2)
    assert s.valuation() == -2


def test_division_exact():
    order = 6
    e = HbarSeries.exp_hbar(1, order)
    num = (e - 1) * (e - 1)
    q = num.divide(e - 1)
    assert q == e - 1


def test_division_creates_pole():
    order = 6
    one = HbarSeries.const(Fraction(1), order)
    inv = one.divide(HbarSeries.hbar_power(2, order))
    assert inv.valuation() == -2
    with pytest.raises(SeriesError):
        one.divide(HbarSeries.hbar_power(3, order))


def test_equality_window_aware():
    a = HbarSeries(0, [1, 2, 3], 2)
    b = HbarSeries(0, [1, 2, 3, 7], 3)
    # agree on the common window
    assert a == b


@settings(max_examples=50, deadline=None)
@given(series_strategy(), series_strategy(), series_strategy())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + HbarSeries.zero(5) == a
    assert a * HbarSeries.const(Fraction(1), 5) == a


@settings(max_examples=50, deadline=None)
@given(series_strategy())
def test_divide_roundtrip(a):
    d = HbarSeries.exp_hbar(1, 5)  # unit (valuation 0)
    assert (a * d).divide(d) == a


def test_scalar_mixing():
    a = HbarSeries(0, [1, 2, 3], 2)
    assert a + 1 == HbarSeries(0, [2, 2, 3], 2)
    assert 2 * a == HbarSeries(0, [2, 4, 6], 2)
    assert 1 - a == HbarSeries(0, [0, -2, -3], 2)


def test_unhashable():
    with pytest.raises(TypeError):
        hash(HbarSeries.zero(2))
