import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rollercoaster as rc
from rollercoaster.errors import InputError


def perms_of(n):
    return st.permutations(tuple(range(1, n + 1))).map(tuple)


@pytest.mark.parametrize("n,expected", [(0, 0), (1, 0), (2, 0), (3, 1), (4, 5), (6, 42)])
def test_baseline_count(n, expected):
    assert rc.baseline_count(n) == expected


def test_baseline_count_rejects_negative():
    with pytest.raises(InputError):
        rc.baseline_count(-1)


@pytest.mark.parametrize(
    "p,t",
    [
        ((1,), 0),
        ((1, 2), 0),
        ((2, 1), 0),
        ((1, 3, 2), 2),
        ((1, 2, 3, 4), 5),
        ((3, 4, 1, 2), 11),
        ((1, 3, 2, 4), 9),
    ],
)
def test_t_fast_fixtures(p, t):
    assert rc.t_fast(p) == t


@pytest.mark.parametrize("n", range(1, 7))
def test_t_fast_equals_oracle_exhaustively(n):
    for p in rc.all_permutations(n):
        assert rc.t_fast(p) == rc.t_bruteforce(p)


@settings(max_examples=100, deadline=None)
@given(st.integers(7, 10).flatmap(perms_of))
def test_t_fast_equals_oracle_sampled(p):
    assert rc.t_fast(p) == rc.t_bruteforce(p)


def _t_by_turning_triples(p):
    # independent cubic-time evaluation of the same decomposition:
    # every strict peak/valley triple (q between p-pos and r-pos) counts
    # 2^(free positions left of the triple + free positions right of it)
    n = len(p)
    total = rc.baseline_count(n)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                peak = p[a] < p[b] > p[c]
                valley = p[a] > p[b] < p[c]
                if peak or valley:
                    total += 2 ** (a + (n - 1 - c))
    return total


@pytest.mark.parametrize("n", range(1, 6))
def test_turning_triple_sum_exhaustive(n):
    for p in rc.all_permutations(n):
        assert rc.t_fast(p) == _t_by_turning_triples(p)


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 9).flatmap(perms_of))
def test_turning_triple_sum_sampled(p):
    assert rc.t_fast(p) == _t_by_turning_triples(p)


@pytest.mark.parametrize("n", [1, 2, 5, 17, 30])
def test_t_fast_monotone_is_baseline(n):
    assert rc.t_fast(tuple(range(1, n + 1))) == rc.baseline_count(n)


def test_t_fast_exact_beyond_word_width():
    # results larger than 2^63 must still be exact
    n = 80
    descending = tuple(range(n, 0, -1))
    expected = rc.baseline_count(n)  # every subsequence is one decreasing run
    assert expected > 2**63
    assert rc.t_fast(descending) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9).flatmap(perms_of))
def test_t_fast_symmetries(p):
    t = rc.t_fast(p)
    assert rc.t_fast(rc.reverse(p)) == t
    assert rc.t_fast(rc.complement(p)) == t


def test_t_max_bound_fixtures():
    assert rc.t_max_bound(3) == 2
    assert rc.t_max_bound(4) == 11
    with pytest.raises(InputError):
        rc.t_max_bound(0)


@pytest.mark.parametrize("n", range(3, 9))
def test_t_max_bound_dominates(n, rc_of):
    res = rc_of(n)
    if n <= 4:
        assert res.max_t == rc.t_max_bound(n)  # tight while every triple can turn
    else:
        assert res.max_t < rc.t_max_bound(n)
