"""Closed-form computation of the statistic t in O(n^2) exact arithmetic.

The identity behind ``t_fast``, stated so it can be re-derived and so the
test suite knows exactly what to gate:

Every subsequence tau with \\|tau\\| >= 3 contributes ``id(tau) = 1 + (number of
direction changes inside tau)``.  Summing the constant 1 over all such
subsequences gives ``baseline_count(n) = sum_{k=3..n} C(n, k)``.  Each
direction change inside some tau is a triple of positions p < q < r, taken
consecutively *within tau*, whose middle value is a strict local peak or
valley ("turning triple").  A fixed turning triple appears consecutively in
exactly those subsequences that skip every position strictly between p and q
and between q and r, while positions before p and after r are free:
2^(p-1) * 2^(n-r) subsequences, each already of length >= 3.  Hence

    t(p) = baseline_count(n) + sum over turning triples of 2^(p-1 + n-r).

The sum is evaluated in O(n^2) by fixing the middle position q and pairing
the prefix sums of 2^(p-1) over smaller/larger left values with the suffix
sums of 2^(n-r) over smaller/larger right values (a peak pairs small-small,
a valley pairs large-large).

All arithmetic is on Python ints, so results are exact at any n.  This
module must never be trusted on its own: ``t_fast`` is gated behind the
equivalence suites against ``perms.t_bruteforce``.
"""
from __future__ import annotations

from typing import Sequence

from .errors import InputError
from .perms import check_permutation


def baseline_count(n: int) -> int:
    """Number of subsequences of length >= 3 of an n-element sequence.

    Equals 2^n - 1 - n - n(n-1)/2, exactly.

    >>> [baseline_count(n) for n in (0, 2, 3, 4, 6)]
    [0, 0, 1, 5, 42]
    """
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    return (1 << n) - 1 - n - n * (n - 1) // 2


def t_fast(p: Sequence[int]) -> int:
    """The statistic t via the turning-triple decomposition, O(n^2).

    >>> t_fast((3, 4, 1, 2))
    11
    >>> t_fast((1, 2, 3, 4))
    5
    """
    vals = check_permutation(p)
    n = len(vals)
    pow2 = [1 << k for k in range(n)]
    total = baseline_count(n)
    for q in range(1, n - 1):
        vq = vals[q]
        lo_before = hi_before = 0
        for pos in range(q):
            if vals[pos] < vq:
                lo_before += pow2[pos]
            else:
                hi_before += pow2[pos]
        lo_after = hi_after = 0
        for pos in range(q + 1, n):
            if vals[pos] < vq:
                lo_after += pow2[n - 1 - pos]
            else:
                hi_after += pow2[n - 1 - pos]
        # peak: smaller on both sides; valley: larger on both sides
        total += lo_before * lo_after + hi_before * hi_after
    return total


def t_max_bound(n: int) -> int:
    """Upper bound on t over S_n: every position triple counted as turning.

    Used for progress/sanity checks and as the overflow gate for the int64
    batch engines.  The bound is attained at n = 4 and loose afterwards.

    >>> t_max_bound(3), t_max_bound(4)
    (2, 11)
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    total = baseline_count(n)
    for p in range(n):
        for r in range(p + 2, n):
            total += (r - p - 1) * (1 << p) * (1 << (n - 1 - r))
    return total
