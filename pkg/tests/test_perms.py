import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rollercoaster as rc
from rollercoaster.errors import CostBoundError, InputError

distinct_ints = st.lists(st.integers(-99, 99), min_size=1, max_size=12, unique=True).map(tuple)


def small_perms(max_n=8, min_n=1):
    return (
        st.integers(min_n, max_n)
        .flatmap(lambda n: st.permutations(tuple(range(1, n + 1))))
        .map(tuple)
    )


@pytest.mark.parametrize(
    "seq,inc,dec",
    [
        ((1, 3, 2, 4), 2, 1),
        ((1, 3, 4), 1, 0),
        ((5, 4, 3, 2, 1), 0, 1),
        ((7,), 0, 0),
        ((1, 3, 2), 1, 1),
        ((2, 1, 3), 1, 1),
        ((1, 2), 1, 0),
    ],
)
def test_run_stats_cases(seq, inc, dec):
    rs = rc.run_stats(seq)
    assert (rs.inc, rs.dec, rs.id) == (inc, dec, inc + dec)


@given(distinct_ints)
def test_run_stats_matches_direction_change_scan(seq):
    rs = rc.run_stats(seq)
    if len(seq) < 2:
        assert rs.id == 0
    else:
        ups = [b > a for a, b in zip(seq, seq[1:])]
        changes = sum(1 for x, y in zip(ups, ups[1:]) if x != y)
        assert rs.id == 1 + changes
    assert abs(rs.inc - rs.dec) <= 1


def test_run_stats_rejects_bad_input():
    with pytest.raises(InputError):
        rc.run_stats(())
    with pytest.raises(InputError):
        rc.run_stats((1, 1))
    with pytest.raises(InputError):
        rc.run_stats((1, "2"))


def test_subsequence_stream_order():
    # sizes ascending; colexicographic position subsets within one size
    assert list(rc.subsequences_at_least_3((3, 4, 1, 2))) == [
        (3, 4, 1),
        (3, 4, 2),
        (3, 1, 2),
        (4, 1, 2),
        (3, 4, 1, 2),
    ]
    assert list(rc.subsequences_at_least_3((1, 2))) == []
    assert len(list(rc.subsequences_at_least_3((1, 4, 2, 6, 3, 5)))) == 42


@pytest.mark.parametrize("n", range(1, 13))
def test_subsequence_stream_count(n):
    identity = tuple(range(1, n + 1))
    expected = 2**n - 1 - n - n * (n - 1) // 2
    assert sum(1 for _ in rc.subsequences_at_least_3(identity)) == expected


def test_subsequences_reject_duplicates():
    with pytest.raises(InputError):
        next(rc.subsequences_at_least_3((1, 2, 1)))


@given(small_perms(max_n=7, min_n=3))
def test_subsequences_unique_and_ordered(p):
    seen = list(rc.subsequences_at_least_3(p))
    assert len(seen) == len(set(seen))
    assert all(len(s) >= 3 for s in seen)
    sizes = [len(s) for s in seen]
    assert sizes == sorted(sizes)


@pytest.mark.parametrize(
    "p,t",
    [((1, 3, 2), 2), ((1, 2, 3, 4), 5), ((3, 4, 1, 2), 11), ((1, 3, 2, 4), 9)],
)
def test_t_bruteforce_fixtures(p, t):
    assert rc.t_bruteforce(p) == t


@pytest.mark.parametrize("n", range(1, 9))
def test_t_bruteforce_monotone_is_subsequence_count(n):
    identity = tuple(range(1, n + 1))
    assert rc.t_bruteforce(identity) == rc.baseline_count(n)


@pytest.mark.parametrize("n", [4, 5])
def test_t_invariant_under_symmetries_exhaustive(n):
    for p in rc.all_permutations(n):
        t = rc.t_bruteforce(p)
        assert rc.t_bruteforce(rc.reverse(p)) == t
        assert rc.t_bruteforce(rc.complement(p)) == t


@settings(max_examples=30, deadline=None)
@given(st.permutations(tuple(range(1, 9))).map(tuple))
def test_t_invariant_under_symmetries_sampled(p):
    t = rc.t_bruteforce(p)
    assert rc.t_bruteforce(rc.reverse(p)) == t
    assert rc.t_bruteforce(rc.complement(p)) == t


def test_t_bruteforce_guard():
    big = tuple(range(1, 27))
    with pytest.raises(CostBoundError):
        rc.t_bruteforce(big)
    # the override flag is honored (proved on a small input)
    assert rc.t_bruteforce((1, 3, 2), allow_large=True) == 2


def test_check_permutation():
    assert rc.check_permutation([2, 4, 1, 5, 3]) == (2, 4, 1, 5, 3)
    for bad in [(), (1, 1, 2), (0, 1), (2, 3), (1, 2.0), (True, 2)]:
        with pytest.raises(InputError):
            rc.check_permutation(bad)


def test_parse_and_format():
    assert rc.parse_permutation("2,4,1,5,3") == (2, 4, 1, 5, 3)
    assert rc.parse_permutation("24153") == (2, 4, 1, 5, 3)
    assert rc.parse_permutation(" 132 ") == (1, 3, 2)
    assert rc.format_permutation((2, 4, 1, 5, 3)) == "2,4,1,5,3"
    # comma form is the only way to spell n >= 10
    ten = ",".join(str(v) for v in range(1, 11))
    assert len(rc.parse_permutation(ten)) == 10
    for bad in ["", "  ", "1,,2", "1,2,x", "abc", "0,1", "1,3", "12345678910"]:
        with pytest.raises(InputError):
            rc.parse_permutation(bad)


@given(small_perms(max_n=12))
def test_format_parse_round_trip(p):
    assert rc.parse_permutation(rc.format_permutation(p)) == p


@given(small_perms(max_n=9))
def test_reverse_complement_algebra(p):
    assert rc.reverse(rc.reverse(p)) == p
    assert rc.complement(rc.complement(p)) == p
    assert rc.reverse(rc.complement(p)) == rc.complement(rc.reverse(p))


def test_reverse_complement_fixtures():
    assert rc.reverse((3, 4, 1, 2)) == (2, 1, 4, 3)
    assert rc.complement((3, 4, 1, 2)) == (2, 1, 4, 3)
    assert rc.complement((2, 4, 1, 5, 3)) == (4, 2, 5, 1, 3)


def test_all_permutations():
    got = list(rc.all_permutations(3))
    assert got == sorted(got)
    assert len(got) == 6
    assert got[0] == (1, 2, 3)
    with pytest.raises(InputError):
        rc.all_permutations(0)
