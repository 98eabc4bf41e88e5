import json

import pytest
from hypothesis import given, strategies as st

from signed_involutions import (
    SignedInvolution,
    alpha,
    enumerate_signed,
    enumerate_signed_k,
    gamma_closed,
    inversions,
    length,
    orbit_dimension,
    validate,
)
from signed_involutions.errors import (
    DuplicateEntry,
    IncompleteSupport,
    KOutOfRange,
    NonIntegerDimension,
    NotAPermutation,
    SignBalanceViolation,
)
from signed_involutions.involutions import max_length

from oracles import brute_length_histogram, inversion_count, signed_involutions


def test_validate_two_cycles_and_signed_points():
    pi = validate([(1, 6), (2, 3)], [(4, "+"), (5, "−"), (7, "+"), (8, "+")])
    assert (pi.p, pi.q, pi.k, pi.n) == (5, 3, 2, 8)
    assert pi.one_line() == [6, 3, 2, 4, 5, 1, 7, 8]


def test_validate_single_fixed_point():
    pi = validate([], [(1, "+")])
    assert (pi.p, pi.q) == (1, 0)


def test_validate_duplicate():
    with pytest.raises(DuplicateEntry):
        validate([(1, 2)], [(1, "+")])


def test_validate_normalizes_order():
    pi = validate([(8, 3), (4, 1)], [(7, "-"), (2, "+"), (6, "+"), (5, "+")])
    assert pi.cycles == ((1, 4), (3, 8))
    assert pi.fixed == ((2, "+"), (5, "+"), (6, "+"), (7, "-"))


def test_validate_sign_balance():
    with pytest.raises(SignBalanceViolation):
        validate([(1, 2)], [(3, "+")], p=1, q=2)


def test_validate_gap():
    with pytest.raises(IncompleteSupport):
        validate([(1, 3)], [])


def test_enumerate_1_1():
    got = {str(pi) for pi in enumerate_signed(1, 1)}
    assert got == {"1+2-", "1-2+", "(1,2)"}


def test_enumerate_2_2_count():
    assert sum(1 for _ in enumerate_signed(2, 2)) == 21


@pytest.mark.parametrize("p", range(5))
def test_enumerate_p_0_identity(p):
    items = list(enumerate_signed(p, 0))
    assert len(items) == 1
    assert items[0].fixed == tuple((i, "+") for i in range(1, p + 1))


def test_enumerate_k():
    assert sum(1 for _ in enumerate_signed_k(2, 2, 0)) == 6
    assert sum(1 for _ in enumerate_signed_k(2, 2, 2)) == 3
    with pytest.raises(KOutOfRange):
        enumerate_signed_k(1, 1, 2)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5)])
def test_enumeration_matches_brute_force(p, q):
    ours = {(tuple(pi.one_line()), pi.fixed) for pi in enumerate_signed(p, q)}
    brute = {(w, tuple(sorted(s.items()))) for w, s in signed_involutions(p, q)}
    assert ours == brute
    assert len(ours) == alpha(p, q)


@pytest.mark.parametrize("p,q", [(3, 2), (2, 3), (4, 4)])
def test_enumeration_is_sorted_and_unique(p, q):
    items = list(enumerate_signed(p, q))
    keys = [pi.sort_key() for pi in items]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(6) for q in range(6)])
def test_k_slices_partition(p, q):
    total = 0
    for k in range(min(p, q) + 1):
        n = sum(1 for _ in enumerate_signed_k(p, q, k))
        assert n == gamma_closed(k, p, q)
        total += n
    assert total == alpha(p, q)


@pytest.mark.parametrize("p,q", [(2, 2), (3, 1), (1, 4)])
def test_json_round_trip(p, q):
    for pi in enumerate_signed(p, q):
        assert SignedInvolution.from_json(pi.to_json()) == pi
        assert set(json.loads(pi.to_json())) == {"cycles", "fixed", "p", "q"}


def test_length_examples():
    assert length(validate([(1, 2)], [])) == 1
    assert length(validate([(1, 4), (2, 3)], [])) == 4
    assert length(validate([], [(1, "+"), (2, "+")])) == 0


def test_length_histogram_2_2():
    hist = [0] * 5
    for pi in enumerate_signed(2, 2):
        hist[length(pi)] += 1
    assert hist == [6, 6, 5, 3, 1]


@pytest.mark.parametrize("p,q", [(3, 3), (4, 2), (2, 4)])
def test_length_histogram_brute(p, q):
    hist = {}
    for pi in enumerate_signed(p, q):
        hist[length(pi)] = hist.get(length(pi), 0) + 1
    assert [hist.get(i, 0) for i in range(max(hist) + 1)] == brute_length_histogram(p, q)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(6) for q in range(6)])
def test_max_length_is_rank(p, q):
    assert max(length(pi) for pi in enumerate_signed(p, q)) == max_length(p, q)


def test_max_length_of_named_top_element():
    # (1,7)(2,6)3+4+5+ in I_{5,2}: 18 inversions, 2 cycles
    top = validate([(1, 7), (2, 6)], [(3, "+"), (4, "+"), (5, "+")])
    assert length(top) == 10 == max_length(5, 2)


@pytest.mark.parametrize("convention", ["geometric", "quadratic"])
def test_orbit_dimension_square_case(convention):
    ident = validate([], [(1, "+"), (2, "+"), (3, "-"), (4, "-")])
    top = validate([(1, 4), (2, 3)], [])
    assert orbit_dimension(ident, convention) == 4
    assert orbit_dimension(top, convention) == 8


def test_orbit_dimension_quadratic_parity():
    pi = validate([], [(1, "+"), (2, "+"), (3, "-")])
    with pytest.raises(NonIntegerDimension):
        orbit_dimension(pi, "quadratic")
    assert orbit_dimension(pi) == 2


@pytest.mark.parametrize("p,q", [(2, 2), (3, 3), (4, 2), (1, 3), (5, 1)])
def test_top_orbit_has_full_dimension(p, q):
    dims = [orbit_dimension(pi) for pi in enumerate_signed(p, q)]
    assert max(dims) == 2 * p * q
    assert min(dims) == p * q


def test_inversions_examples():
    assert inversions([4, 2, 1, 3]) == 4
    assert inversions(list(range(1, 8))) == 0
    assert inversions(list(range(7, 0, -1))) == 21
    with pytest.raises(NotAPermutation):
        inversions([1, 1, 2])


@given(st.permutations(list(range(1, 9))))
def test_inversions_match_oracle(w):
    assert inversions(w) == inversion_count(w)
