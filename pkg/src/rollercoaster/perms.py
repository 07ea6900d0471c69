"""Permutations in one-line notation, run statistics, and the exhaustive oracle.

A permutation of [n] = {1, ..., n} is handled as a tuple of the values
(p_1, ..., p_n); positions are spoken of 1-based, as in the mathematics,
while tuple indexing in code is of course 0-based.  Any subsequence of a
permutation (values at an increasing set of positions, not necessarily
contiguous) is a plain tuple of distinct integers and every statistic here
is defined on those as well.

The statistic this package revolves around:

- ``run_stats(s)`` counts the maximal strictly-increasing and
  strictly-decreasing contiguous runs of length >= 2 in ``s``; their total is
  ``id``.  Equivalently, for a sequence of length m >= 2, ``id`` is 1 plus the
  number of adjacent direction changes; a single element has no runs at all.
- ``t_bruteforce(p)`` sums ``id`` over every subsequence of ``p`` of length
  >= 3, by literally walking all of them.  It is deliberately the slowest and
  most transparent implementation in the package: everything faster
  (``stats.t_fast``, the vectorized engines in ``batch``) is validated
  against it and never the other way around.

Text form: the canonical format is decimal values joined by commas with no
spaces, e.g. ``"2,4,1,5,3"``.  A compact digit string such as ``"24153"`` is
accepted on input only while n <= 9; output is always canonical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CostBoundError, InputError

# Guard for the exhaustive walk; it touches ~2^n * n values.
BRUTEFORCE_LIMIT = 25


def check_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Validate that ``values`` is a permutation of 1..n and return it as a tuple.

    >>> check_permutation([2, 4, 1, 5, 3])
    (2, 4, 1, 5, 3)
    >>> check_permutation([1, 1, 2])
    Traceback (most recent call last):
        ...
    rollercoaster.errors.InputError: not a permutation of 1..3: (1, 1, 2)
    """
    p = tuple(values)
    n = len(p)
    if n == 0:
        raise InputError("permutation must be nonempty")
    if any(not isinstance(v, int) or isinstance(v, bool) for v in p):
        raise InputError(f"permutation values must be integers: {p!r}")
    if sorted(p) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {p!r}")
    return p


def check_sequence(values: Sequence[int]) -> tuple[int, ...]:
    """Validate a nonempty sequence of pairwise-distinct integers."""
    s = tuple(values)
    if not s:
        raise InputError("sequence must be nonempty")
    if any(not isinstance(v, int) or isinstance(v, bool) for v in s):
        raise InputError(f"sequence values must be integers: {s!r}")
    if len(set(s)) != len(s):
        raise InputError(f"sequence values must be distinct: {s!r}")
    return s


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse the canonical comma form, or the digit form when n <= 9.

    >>> parse_permutation("2,4,1,5,3")
    (2, 4, 1, 5, 3)
    >>> parse_permutation("24153")
    (2, 4, 1, 5, 3)
    """
    body = text.strip()
    if not body:
        raise InputError("empty permutation text")
    if "," in body:
        try:
            values = tuple(int(part) for part in body.split(","))
        except ValueError:
            raise InputError(f"bad permutation text: {text!r}") from None
        return check_permutation(values)
    if not body.isdigit():
        raise InputError(f"bad permutation text: {text!r}")
    if len(body) > 9:
        raise InputError(
            f"digit form only covers n <= 9; use comma-separated values: {text!r}"
        )
    return check_permutation(tuple(int(ch) for ch in body))


def format_permutation(values: Sequence[int]) -> str:
    """Emit the canonical comma-joined form.

    >>> format_permutation((2, 4, 1, 5, 3))
    '2,4,1,5,3'
    """
    return ",".join(str(v) for v in values)


@dataclass(frozen=True)
class RunStats:
    """Counts of maximal monotone runs of length >= 2.

    ``id`` is always ``inc + dec`` (it is derived, so the invariant cannot
    drift), and runs alternate in direction, so ``abs(inc - dec) <= 1``.
    """

    inc: int
    dec: int

    @property
    def id(self) -> int:
        return self.inc + self.dec


def run_stats(seq: Sequence[int]) -> RunStats:
    """Count maximal increasing/decreasing contiguous runs of length >= 2.

    A lone element is never a run, so sequences of length <= 1 score zero.

    >>> run_stats((1, 3, 2, 4))
    RunStats(inc=2, dec=1)
    >>> run_stats((1, 3, 2, 4)).id
    3
    >>> run_stats((5, 4, 3, 2, 1))
    RunStats(inc=0, dec=1)
    >>> run_stats((7,))
    RunStats(inc=0, dec=0)
    """
    vals = check_sequence(seq)
    inc = dec = 0
    prev_up: bool | None = None
    for a, b in zip(vals, vals[1:]):
        up = b > a
        if up != prev_up:
            if up:
                inc += 1
            else:
                dec += 1
            prev_up = up
    return RunStats(inc, dec)


def _colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """0-based k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for rest in _colex_subsets(last, k - 1):
            yield rest + (last,)


def subsequences_at_least_3(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Stream the value sequence of every position subset of size >= 3.

    Each subset appears exactly once.  Order: subset size ascending, and
    within one size the position subsets run in colexicographic order.  For
    fewer than three positions the stream is empty.

    >>> list(subsequences_at_least_3((3, 4, 1, 2)))
    [(3, 4, 1), (3, 4, 2), (3, 1, 2), (4, 1, 2), (3, 4, 1, 2)]
    >>> list(subsequences_at_least_3((1, 2)))
    []
    """
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise InputError(f"sequence values must be distinct: {vals!r}")
    n = len(vals)
    for k in range(3, n + 1):
        for pos in _colex_subsets(n, k):
            yield tuple(vals[i] for i in pos)


def t_bruteforce(p: Sequence[int], *, allow_large: bool = False) -> int:
    """The statistic t by definition: sum of ``id`` over all subsequences of
    length >= 3, walked exhaustively.

    This is the oracle the rest of the package is measured against; keep it
    dumb.  Cost is on the order of 2^n * n, so n > 25 is refused unless
    ``allow_large`` is set.

    >>> t_bruteforce((1, 3, 2))
    2
    >>> t_bruteforce((1, 2, 3, 4))
    5
    >>> t_bruteforce((3, 4, 1, 2))
    11
    >>> t_bruteforce((1, 3, 2, 4))
    9
    """
    vals = check_permutation(p)
    n = len(vals)
    if n > BRUTEFORCE_LIMIT and not allow_large:
        raise CostBoundError(
            f"t_bruteforce walks ~2^{n} subsequences; the allow-large override forces it"
        )
    return sum(run_stats(sub).id for sub in subsequences_at_least_3(vals))


def reverse(p: Sequence[int]) -> tuple[int, ...]:
    """(p_1, ..., p_n) -> (p_n, ..., p_1).  Preserves t.

    >>> reverse((3, 4, 1, 2))
    (2, 1, 4, 3)
    """
    return check_permutation(p)[::-1]


def complement(p: Sequence[int]) -> tuple[int, ...]:
    """Map every value v to n + 1 - v.  Swaps ascents with descents, preserves t.

    >>> complement((3, 4, 1, 2))
    (2, 1, 4, 3)
    """
    vals = check_permutation(p)
    n = len(vals)
    return tuple(n + 1 - v for v in vals)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All of S_n in lexicographic order, streamed.

    ``itertools.permutations`` over sorted input is exactly the
    lexicographic-successor walk, without materializing n! tuples.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return itertools.permutations(range(1, n + 1))
