"""Shared fixtures: cached enumeration results and the known small maximizer sets."""
import functools

import pytest

import rollercoaster as rc

# Hand-verifiable maximizer sets for the smallest sizes (digit shorthand).
# These are frozen ground truth: every enumeration path must reproduce them.
KNOWN_RC = {
    3: ("132", "213", "231", "312"),
    4: ("2143", "2413", "3142", "3412"),
    5: ("24153", "25143", "31524", "32514", "34152", "35142", "41523", "42513"),
    6: ("326154", "351624", "426153", "451623"),
}

# max t over S_n, computed once by the exhaustive search and frozen; the
# n=3 and n=4 values are verifiable by hand (and n=4 equals t_max_bound(4)).
KNOWN_MAX_T = {3: 2, 4: 11, 5: 37, 6: 106, 7: 270, 8: 653, 9: 1523, 10: 3480}


def as_members(digit_strings):
    return tuple(tuple(int(ch) for ch in s) for s in digit_strings)


@functools.lru_cache(maxsize=None)
def exhaustive(n: int) -> rc.RCResult:
    return rc.enumerate_rc_exhaustive(n)


@functools.lru_cache(maxsize=None)
def pruned(n: int, recursive_filter: bool = True) -> rc.RCResult:
    return rc.enumerate_rc_pruned(n, recursive_filter=recursive_filter)


@pytest.fixture(scope="session")
def rc_of():
    """Session-cached exhaustive enumeration, keyed by n."""
    return exhaustive


@pytest.fixture(scope="session")
def pruned_of():
    """Session-cached pruned enumeration, keyed by (n, recursive_filter)."""
    return pruned


@pytest.fixture
def announce(capsys):
    """Print one PASS/FAIL line per acceptance criterion, capture or not."""

    def _announce(name: str, ok: bool) -> None:
        with capsys.disabled():
            print(f"{'PASS' if ok else 'FAIL'} acceptance: {name}")
        assert ok, f"acceptance criterion failed: {name}"

    return _announce
