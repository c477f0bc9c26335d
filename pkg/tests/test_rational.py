import math

from hypothesis import given, settings, strategies as st

from burnzeta.rational import (RationalFunction, binomial, div_binomial, pmul, series_binomial_power,
                               series_inverse, series_mul, times_binomial)

from oracles import binomial_series

polys = st.lists(st.integers(-5, 5), max_size=6)
dens = st.lists(st.integers(1, 4), max_size=3)


def test_binomial_multiply_divide():
    p = (1, 2, 3)
    assert div_binomial(times_binomial(p, 3), 3) == p
    assert div_binomial((1, 1), 2) is None
    assert pmul(binomial(2), (1,)) == (1, 0, -1)


def test_series_binomial_power_matches_oracle():
    for m in (1, 2, 3):
        for e in range(0, 5):
            assert series_binomial_power(m, -e, 12) == binomial_series(m, e, 12)
    assert series_mul(series_binomial_power(2, 3, 12), series_binomial_power(2, -3, 12), 12) == [1] + [0] * 12


def test_series_inverse():
    a = [1, -3, 2, 5]
    inv = series_inverse(a, 6)
    assert series_mul(a, inv, 6) == [1] + [0] * 6


@settings(max_examples=100, deadline=None)
@given(polys, dens, polys, dens)
def test_field_operations_match_series(n1, d1, n2, d2):
    a, b = RationalFunction(n1, d1), RationalFunction(n2, d2)
    n = 10
    sa, sb = a.series(n), b.series(n)
    assert (a + b).series(n) == [x + y for x, y in zip(sa, sb)]
    assert (a - b).series(n) == [x - y for x, y in zip(sa, sb)]
    assert (a * b).series(n) == series_mul(sa, sb, n)
    assert a.reduce() == a
    assert a.reduce().series(n) == sa
    assert RationalFunction.from_json(a.to_json()) == a


def test_from_binomials_expansion():
    f = RationalFunction.from_binomials({2: -3, 6: -1})
    want = [0] * 13
    b2, b6 = binomial_series(2, 3, 12), binomial_series(6, 1, 12)
    for i in range(13):
        for j in range(13 - i):
            want[i + j] += b2[i] * b6[j]
    assert f.series(12) == want


def test_exact_div_and_reduce():
    f = RationalFunction((0, 0, 6), (2, 2))
    assert f.exact_div(2) == RationalFunction((0, 0, 3), (2, 2))
    # (1 - t^2) / (1 - t)^2 reduces to (1 + t) / (1 - t)
    g = RationalFunction((1, 0, -1), (1, 1)).reduce()
    assert g == RationalFunction((1, 1), (1,))
    assert sum(1 for _ in g.den) <= 1


def test_pretty_printing():
    assert str(RationalFunction((0, 0, 3), (2, 2, 6))) == "3t^2/((1-t^2)^2(1-t^6))"
    assert str(RationalFunction((1,), (6,))) == "1/(1-t^6)"
    assert str(RationalFunction.constant(0)) == "0"


def test_equality_by_cross_multiplication():
    a = RationalFunction((1,), (1,))
    b = RationalFunction((1, 1), (2,))
    assert a == b
    assert a != RationalFunction((1,), (2,))


def test_geometric_coefficients():
    assert RationalFunction((1,), (1, 1)).series(5) == [math.comb(k + 1, 1) for k in range(6)]
