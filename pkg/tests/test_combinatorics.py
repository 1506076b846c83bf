"""Stirling numbers, Touchard polynomials and the (x d/dx)^m expansion."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from scipy.special import stirling2 as scipy_stirling2

from core.combinatorics import (
    bell_number, stirling2, stirling2_explicit, stirling_table, touchard, xd_expand_apply,
)
from core.errors import DomainError


def test_known_values():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(10, 3) == 9330


def test_k_above_n_is_zero():
    assert stirling2(3, 7) == 0
    assert stirling2_explicit(3, 7) == 0


def test_negative_arguments_rejected():
    with pytest.raises(DomainError):
        stirling2(-1, 0)
    with pytest.raises(DomainError):
        stirling2_explicit(2, -1)


@given(st.integers(0, 25), st.integers(0, 25))
def test_recurrence_matches_explicit_sum(n, k):
    assert stirling2(n, k) == stirling2_explicit(n, k)


def test_matches_scipy():
    for n in range(15):
        for k in range(n + 1):
            assert stirling2(n, k) == int(scipy_stirling2(n, k, exact=True))


def test_table_grows_on_demand():
    table = stirling_table(30)
    assert table.n_max >= 30
    assert table.row(30)[30] == 1
    assert sum(table.row(6)) == bell_number(6)


def test_touchard_at_one_is_bell():
    assert touchard(3).evaluate(1) == 5
    for n in range(21):
        assert touchard(n).evaluate(1) == bell_number(n)
    assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


@given(st.integers(0, 6), st.integers(0, 12),
       st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_xd_eigenfunctions(p, m, xi):
    # (x d/dx)^m x^p = p^m x^p
    derivs = []
    for r in range(m + 1):
        coefficient = 1
        for i in range(r):
            coefficient *= p - i
        derivs.append(coefficient * xi ** (p - r) if r <= p else 0)
    assert xd_expand_apply(m, derivs, xi) == p ** m * xi ** p


def test_xd_needs_matching_derivatives():
    with pytest.raises(DomainError):
        xd_expand_apply(3, [1, 2], Fraction(1))
