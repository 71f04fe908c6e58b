import pytest
from hypothesis import given, settings, strategies as st

from smallpart.series import (QBinomial, TruncatedSeries, cumulate_mod_L, first_negative,
                              inv_pochhammer, kronecker_mul, pochhammer, q_binomial,
                              schoolbook_mul)

from oracles import count_parts_in, naive_mul, q_binomial_by_subsets

coeff = st.integers(min_value=-10**30, max_value=10**30)


def series(T):
    return st.lists(coeff, min_size=T, max_size=T).map(TruncatedSeries)


def test_order_padding_and_truncation():
    s = TruncatedSeries([1, 2], order=4)
    assert s.coeffs == (1, 2, 0, 0)
    assert s.truncate(2).coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ValueError):
        TruncatedSeries([])


def test_mixed_orders_take_minimum():
    a = TruncatedSeries([1, 1, 1])
    b = TruncatedSeries([1, 1, 1, 1, 1])
    assert (a * b).order == 3
    assert (a * b).coeffs == (1, 2, 3)


@settings(max_examples=40, deadline=None)
@given(series(12), series(12), series(12))
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == TruncatedSeries([0] * 12)
    assert a * TruncatedSeries.one(12) == a


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 120), st.data())
def test_kronecker_matches_schoolbook(T, data):
    x = data.draw(st.lists(coeff, min_size=T, max_size=T))
    y = data.draw(st.lists(coeff, min_size=T, max_size=T))
    assert kronecker_mul(x, y, T) == schoolbook_mul(x, y, T) == naive_mul(x, y, T)


def test_kronecker_handles_sign_boundaries():
    x = [-1, 255, -256, 2**64, -(2**64)] * 20
    y = [1, -1] * 50
    T = 100
    assert kronecker_mul(x, y, T) == naive_mul(x, y, T)


@pytest.mark.parametrize("m,n", [(1, 5), (3, 4), (4, 14), (2, 1)])
def test_inv_pochhammer_counts_partitions(m, n):
    T = 30
    s = inv_pochhammer(m, n, T)
    assert list(s.coeffs) == [count_parts_in(k, m, m + n - 1) for k in range(T)]


def test_pochhammer_inverts():
    T = 60
    assert (pochhammer(3, 7, T) * inv_pochhammer(3, 7, T)).coeffs == (1,) + (0,) * (T - 1)


@pytest.mark.parametrize("A,B", [(0, 0), (5, 2), (7, 3), (8, 4), (6, 6), (9, 1)])
def test_q_binomial_against_subsets(A, B):
    qb = q_binomial(A, B)
    assert isinstance(qb, QBinomial)
    assert list(qb.poly.coeffs) == q_binomial_by_subsets(A, B)
    from math import comb
    assert qb.at_one() == comb(A, B)
    assert qb.degree == B * (A - B)


def test_q_binomial_errors():
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(6, 3, T=5)


def test_cumulate_mod_L_is_division():
    h = TruncatedSeries([1, -2, 3, 0, 5, -1, 2, 7, 0, 1])
    g = cumulate_mod_L(h, 3)
    back = g * TruncatedSeries.from_terms({0: 1, 3: -1}, 10)
    assert back == h
    assert g[7] == h[1] + h[4] + h[7]


def test_first_negative():
    assert first_negative(TruncatedSeries([0, 1, -3, -1])) == (2, -3)
    assert first_negative(TruncatedSeries([0, 1])) is None
