from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pfafftoda.series import TruncSeries, ts_exp, ts_inv

VARS = ("a", "b", "c")


@st.composite
def series(draw, order=4):
    out = TruncSeries.zero(order)
    for _ in range(draw(st.integers(0, 5))):
        c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
        m = TruncSeries.const(c, order)
        for v in VARS:
            m = m * TruncSeries.var(v, order, draw(st.integers(0, 2)))
        out = out + m
    return out


@given(series(), series(), series())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == TruncSeries.zero(4)


@given(series())
def test_truncation_drops_high_degree(x):
    for m in (x * x).terms:
        assert sum(k for _, k in m) <= 4


@given(series(), series())
@settings(max_examples=30)
def test_exp_is_a_homomorphism(x, y):
    x = x - x.constant_term()
    y = y - y.constant_term()
    assert ts_exp(x + y) == ts_exp(x) * ts_exp(y)


@given(series())
def test_inverse(x):
    x = x - x.constant_term() + 2
    assert x * ts_inv(x) == TruncSeries.const(1, 4)


def test_mixed_orders_take_minimum():
    x = TruncSeries.var("a", 2)
    y = TruncSeries.var("a", 5)
    assert (x * y).order == 2
    assert (x * y * y).is_zero()


def test_text_form_is_canonical():
    s = TruncSeries.var("b", 3) - TruncSeries.var("a", 3).scale(Fraction(1, 2)) + 1
    assert s.to_text() == "1 - 1/2 * a + b"
