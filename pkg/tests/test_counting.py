from fractions import Fraction
from math import comb

import pytest

from signed_involutions import (
    CountTable,
    alpha,
    c_involutions,
    delannoy,
    gamma_aux_checks,
    gamma_closed,
    gamma_recurrence,
    k_poly,
)
from signed_involutions.counting import ALPHA_METHODS, involution_count
from signed_involutions.errors import IndexOutOfRange, KOutOfRange

from oracles import brute_alpha, brute_gamma, c_brute

# frozen from oracles.brute_alpha (scan of S_n with sign assignments)
ALPHA_BRUTE = [
    [1, 1, 1, 1, 1],
    [1, 3, 6, 10, 15],
    [1, 6, 21, 55, 120],
    [1, 10, 55, 215, 665],
    [1, 15, 120, 665, 2835],
]


def test_gamma_examples():
    assert gamma_closed(0, 2, 2) == 6
    assert gamma_closed(2, 2, 2) == 3
    assert gamma_closed(1, 3, 1) == 6 == c_involutions(4, 2)
    assert gamma_recurrence(1, 1, 1) == 1
    assert gamma_recurrence(1, 2, 2) == 12
    assert gamma_recurrence(0, 3, 2) == 10


def test_gamma_k_range():
    with pytest.raises(KOutOfRange):
        gamma_closed(2, 1, 3)
    with pytest.raises(KOutOfRange):
        gamma_recurrence(-1, 2, 2)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(7) for q in range(7)])
def test_gamma_routes_agree(p, q):
    for k in range(min(p, q) + 1):
        assert gamma_closed(k, p, q) == gamma_recurrence(k, p, q) == gamma_closed(k, q, p)
    assert gamma_closed(0, p, q) == comb(p + q, q)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5)])
def test_gamma_brute(p, q):
    for k in range(min(p, q) + 1):
        assert gamma_closed(k, p, q) == brute_gamma(k, p, q)


def test_gamma_aux_examples():
    assert gamma_aux_checks(1, 2, 2) == (True, True, True)
    assert gamma_aux_checks(2, 2, 2) == (True, True, True)
    assert gamma_aux_checks(1, 1, 1) == (True, True, True)
    with pytest.raises(IndexOutOfRange):
        gamma_aux_checks(0, 2, 2)


def test_gamma_aux_first_identity_by_hand():
    assert Fraction(2 * 2, 2) * gamma_closed(0, 2, 2) == 12
    assert Fraction(1, 4) * gamma_closed(1, 2, 2) == 3


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 7) for q in range(1, 7)])
def test_gamma_aux_range(p, q):
    for k in range(1, min(p, q) + 1):
        assert all(gamma_aux_checks(k, p, q))


def test_alpha_examples():
    assert alpha(1, 1) == 3
    assert alpha(2, 2) == 21 == 6 + 6 + 3 * 3
    assert all(alpha(0, q) == 1 for q in range(10))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5)])
def test_alpha_frozen_brute(p, q):
    assert alpha(p, q) == ALPHA_BRUTE[p][q]


def test_frozen_table_matches_oracle():
    assert [[brute_alpha(p, q) for q in range(4)] for p in range(4)] == \
        [row[:4] for row in ALPHA_BRUTE[:4]]


@pytest.mark.parametrize("method", ALPHA_METHODS)
@pytest.mark.parametrize("p,q", [(p, q) for p in range(6) for q in range(6)])
def test_alpha_methods_agree(method, p, q):
    assert alpha(p, q, method) == alpha(p, q)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(9) for q in range(9)])
def test_alpha_gamma_sum_and_symmetry(p, q):
    assert alpha(p, q, "gamma-sum") == alpha(p, q) == alpha(q, p)


def test_alpha_unknown_method():
    with pytest.raises(ValueError):
        alpha(1, 1, "guess")


def test_delannoy_values():
    assert delannoy(2, 2) == 13
    assert delannoy(5, 0) == 1
    assert delannoy(1, 1) == 3
    # central Delannoy numbers
    assert [delannoy(n, n) for n in range(6)] == [1, 3, 13, 63, 321, 1683]


def test_count_table_growth():
    t = CountTable()
    assert t.alpha(2, 2) == 21
    assert t.alpha(4, 1) == 15
    assert t.gamma(1, 4, 3) == gamma_closed(1, 4, 3)
    assert t.delannoy(3, 4) == delannoy(3, 4)


def test_alpha_is_big():
    a = alpha(30, 30)
    assert a.bit_length() > 64
    assert a == alpha(30, 30, "gamma-sum")


def test_c_involutions():
    assert c_involutions(4, 2) == 6
    assert [involution_count(n) for n in range(6)] == [1, 1, 2, 4, 10, 26]
    assert [k_poly(n)(1) for n in range(6)] == [1, 1, 2, 4, 10, 26]
    assert c_involutions(5, 2) == 0


@pytest.mark.parametrize("n", range(8))
def test_c_involutions_brute(n):
    for r in range(n + 1):
        assert c_involutions(n, r) == c_brute(n, r)


@pytest.mark.parametrize("n", range(10))
def test_k_poly_parity(n):
    for r, c in k_poly(n).terms():
        assert (n - r) % 2 == 0 and c > 0


@pytest.mark.parametrize("p,k", [(p, k) for p in range(6) for k in range(p + 1)])
def test_gamma_diagonal_is_c(p, k):
    assert gamma_closed(k, p, k) == c_involutions(p + k, p - k)
