"""Structural checks for maximizer sets: alternation, endpoints, value classes.

The enumerated maximizer sets (see ``search``) are expected to satisfy a
stack of structural properties, each of which gets an independent checker
here plus an umbrella runner, ``verify_structure``, that produces a
machine-readable :class:`StructureReport`.  The five check ids are stable
strings used in reports, JSON output and the CLI:

=================  ============================================================
``T1-alternating``   every member is alternating or reverse-alternating
``T2-endpoints``     first and last values differ by exactly 1
``T3-parity``        interior even positions sit above both endpoint values and
                     interior odd positions below, for alternating members
                     (mirrored for reverse-alternating)
``C1-classes``       endpoint, interior-odd and interior-even value *sets*
                     match the exact classes forced by the n-parity and the
                     alternation kind
``T5-recursive``     members are recursively alternating: alternating at every
                     level of repeated interior parity splitting
=================  ============================================================
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError, NotAlternatingError
from .perms import check_permutation, check_sequence, format_permutation


class AlternationKind(enum.Enum):
    """Zigzag class of a sequence: up-first, down-first, or neither."""

    ALTERNATING = "alternating"
    REVERSE_ALTERNATING = "reverse-alternating"
    NEITHER = "neither"


CHECK_IDS = (
    "T1-alternating",
    "T2-endpoints",
    "T3-parity",
    "C1-classes",
    "T5-recursive",
)

#: split_odd_even conventions: "inherited" keeps the parity of positions in the
#: original sequence, "rebased" renumbers the interior slice from 1 first.
CONVENTIONS = ("inherited", "rebased")


def classify_alternation(seq: Sequence[int]) -> AlternationKind:
    """Classify by the first comparison and strict alternation afterwards.

    s_1 < s_2 > s_3 < ... is ALTERNATING, s_1 > s_2 < s_3 > ... is
    REVERSE_ALTERNATING, anything else NEITHER.  A single element has no
    comparison and vacuously fits both patterns; it is reported as
    ALTERNATING by convention, and every consumer that cares treats lengths
    <= 2 as fitting either pattern.

    >>> classify_alternation((2, 4, 1, 3)).value
    'alternating'
    >>> classify_alternation((2, 1, 4, 3)).value
    'reverse-alternating'
    >>> classify_alternation((1, 2, 3, 4)).value
    'neither'
    """
    vals = check_sequence(seq)
    if len(vals) == 1:
        return AlternationKind.ALTERNATING
    first_up = vals[1] > vals[0]
    expect_up = first_up
    for a, b in zip(vals, vals[1:]):
        if (b > a) != expect_up:
            return AlternationKind.NEITHER
        expect_up = not expect_up
    return AlternationKind.ALTERNATING if first_up else AlternationKind.REVERSE_ALTERNATING


def endpoint_diff_ok(p: Sequence[int]) -> bool:
    """True iff the first and last values differ by exactly one."""
    vals = check_permutation(p)
    if len(vals) < 2:
        raise InputError("endpoint check needs n >= 2")
    return abs(vals[-1] - vals[0]) == 1


def _interior_positions(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(odd, even) interior positions, 1-based, i.e. all j in [2, n-1] by parity."""
    odd = tuple(j for j in range(2, n) if j % 2 == 1)
    even = tuple(j for j in range(2, n) if j % 2 == 0)
    return odd, even


def parity_separation_ok(p: Sequence[int]) -> bool:
    """Interior values split around the endpoints according to position parity.

    For an alternating permutation every interior even-position value must
    exceed both endpoint values and every interior odd-position value must be
    below both; for reverse-alternating the roles swap.  Values are distinct,
    so strict and weak comparison coincide here.
    """
    vals = check_permutation(p)
    n = len(vals)
    if n < 3:
        raise InputError("parity separation needs n >= 3")
    kind = classify_alternation(vals)
    if kind is AlternationKind.NEITHER:
        raise NotAlternatingError(f"not alternating either way: {vals!r}")
    lo_end = min(vals[0], vals[-1])
    hi_end = max(vals[0], vals[-1])
    odd_pos, even_pos = _interior_positions(n)
    if kind is AlternationKind.ALTERNATING:
        high_pos, low_pos = even_pos, odd_pos
    else:
        high_pos, low_pos = odd_pos, even_pos
    return all(vals[j - 1] > hi_end for j in high_pos) and all(
        vals[j - 1] < lo_end for j in low_pos
    )


def case_value_sets(
    n: int, kind: AlternationKind
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Expected (endpoints, interior-odd, interior-even) value sets for a case.

    The partition follows from endpoint_diff_ok plus parity_separation_ok:
    the endpoints are two consecutive values, one parity class takes every
    value above them, the other every value below, and the class sizes are
    fixed by how many interior positions each parity has.

    ============================  ===========  ==================  ==================
    case                          endpoints    interior odd        interior even
    ============================  ===========  ==================  ==================
    n odd,  alternating           (n-1)/2 pair 1 .. (n-3)/2         (n+3)/2 .. n
    n odd,  reverse-alternating   (n+1)/2 pair (n+5)/2 .. n         1 .. (n-1)/2
    n even, alternating           n/2 pair     1 .. n/2 - 1         n/2 + 2 .. n
    n even, reverse-alternating   n/2 pair     n/2 + 2 .. n         1 .. n/2 - 1
    ============================  ===========  ==================  ==================

    where "m pair" means {m, m+1}.
    """
    if kind is AlternationKind.NEITHER:
        raise NotAlternatingError("no value-class case for non-alternating sequences")
    if n % 2 == 1:
        if kind is AlternationKind.ALTERNATING:
            ends = ((n - 1) // 2, (n + 1) // 2)
            odd_vals = range(1, (n - 3) // 2 + 1)
            even_vals = range((n + 3) // 2, n + 1)
        else:
            ends = ((n + 1) // 2, (n + 3) // 2)
            odd_vals = range((n + 5) // 2, n + 1)
            even_vals = range(1, (n - 1) // 2 + 1)
    else:
        ends = (n // 2, n // 2 + 1)
        if kind is AlternationKind.ALTERNATING:
            odd_vals = range(1, n // 2)
            even_vals = range(n // 2 + 2, n + 1)
        else:
            odd_vals = range(n // 2 + 2, n + 1)
            even_vals = range(1, n // 2)
    return frozenset(ends), frozenset(odd_vals), frozenset(even_vals)


@dataclass(frozen=True)
class ParityClassReport:
    """Set-by-set comparison of a permutation against its value-class case.

    Comparison is on *sets*: the case constrains which values live at the
    endpoint/odd/even positions, not their order.
    """

    case: str
    endpoint_set_ok: bool
    odd_interior_set_ok: bool
    even_interior_set_ok: bool
    expected_endpoints: frozenset[int]
    actual_endpoints: frozenset[int]
    expected_odd: frozenset[int]
    actual_odd: frozenset[int]
    expected_even: frozenset[int]
    actual_even: frozenset[int]

    @property
    def all_ok(self) -> bool:
        return self.endpoint_set_ok and self.odd_interior_set_ok and self.even_interior_set_ok


def parity_class_report(p: Sequence[int]) -> ParityClassReport:
    """Compare a permutation's value placement against its (n parity, kind) case.

    >>> parity_class_report((2, 4, 1, 5, 3)).all_ok
    True
    >>> parity_class_report((4, 5, 1, 6, 2, 3)).all_ok
    True
    """
    vals = check_permutation(p)
    n = len(vals)
    if n < 3:
        raise InputError("value-class check needs n >= 3")
    kind = classify_alternation(vals)
    if kind is AlternationKind.NEITHER:
        raise NotAlternatingError(f"not alternating either way: {vals!r}")
    exp_ends, exp_odd, exp_even = case_value_sets(n, kind)
    odd_pos, even_pos = _interior_positions(n)
    act_ends = frozenset((vals[0], vals[-1]))
    act_odd = frozenset(vals[j - 1] for j in odd_pos)
    act_even = frozenset(vals[j - 1] for j in even_pos)
    return ParityClassReport(
        case=f"n-{'odd' if n % 2 else 'even'}-{kind.value}",
        endpoint_set_ok=act_ends == exp_ends,
        odd_interior_set_ok=act_odd == exp_odd,
        even_interior_set_ok=act_even == exp_even,
        expected_endpoints=exp_ends,
        actual_endpoints=act_ends,
        expected_odd=exp_odd,
        actual_odd=act_odd,
        expected_even=exp_even,
        actual_even=act_even,
    )


def split_odd_even(
    seq: Sequence[int], convention: str = "inherited"
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the interior slice (positions 2..m-1) into parity subsequences.

    Under the default ``inherited`` convention the parts keep the parity of
    their positions in the *original* sequence: odd part from positions
    3, 5, 7, ..., even part from 2, 4, 6, ...  Under ``rebased`` the interior
    slice is renumbered from 1 before splitting, which exchanges the two
    parts.  Both parts are empty for length <= 2.

    >>> split_odd_even((2, 4, 1, 5, 3))
    ((1,), (4, 5))
    >>> split_odd_even((3, 4, 1, 2))
    ((1,), (4,))
    >>> split_odd_even((1, 2))
    ((), ())
    """
    vals = check_sequence(seq)
    if convention not in CONVENTIONS:
        raise InputError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    m = len(vals)
    interior = range(2, m)  # 1-based positions 2..m-1
    odd = tuple(vals[j - 1] for j in interior if j % 2 == 1)
    even = tuple(vals[j - 1] for j in interior if j % 2 == 0)
    if convention == "rebased":
        # renumbering the slice from 1 swaps which part is called odd
        odd, even = even, odd
    return odd, even


def is_recursively_alternating(seq: Sequence[int], convention: str = "inherited") -> bool:
    """Alternating at every level of repeated interior parity splitting.

    The sequence itself must be alternating or reverse-alternating, and both
    parts of ``split_odd_even`` must be recursively alternating in turn.
    Lengths <= 2 fit both patterns vacuously and stop the recursion.  The
    verdict does not depend on the split convention: the conventions only
    exchange which part is *called* odd, and both parts are checked.

    >>> is_recursively_alternating((3, 5, 1, 6, 2, 4))
    True
    >>> is_recursively_alternating((1, 2, 3))
    False
    >>> is_recursively_alternating((7, 2))
    True
    """
    vals = check_sequence(seq)
    if len(vals) <= 2:
        return True
    if classify_alternation(vals) is AlternationKind.NEITHER:
        return False
    odd, even = split_odd_even(vals, convention)
    return (not odd or is_recursively_alternating(odd, convention)) and (
        not even or is_recursively_alternating(even, convention)
    )


@dataclass
class StructureReport:
    """Aggregated verdicts of the five structural checks over a member list.

    A failed check carries at least one counterexample; a passed check
    carries none.
    """

    n: int
    verdicts: dict[str, bool]
    counterexamples: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(self.verdicts.values())

    def to_json_dict(self) -> dict:
        """Stable JSON shape: verdict strings keyed by check id, then
        counterexamples as {"check", "permutation"} objects in check order."""
        return {
            "n": self.n,
            "verdicts": {cid: "pass" if ok else "fail" for cid, ok in self.verdicts.items()},
            "counterexamples": [
                {"check": cid, "permutation": format_permutation(perm)}
                for cid, perm in self.counterexamples
            ],
        }


def verify_structure(
    members: Sequence[Sequence[int]], *, convention: str = "inherited"
) -> StructureReport:
    """Run all five structural checks over every member.

    ``members`` is a nonempty collection of same-length permutations (a
    maximizer set, or any doctored list under test).  A member that is not
    alternating at all fails T1 and is also counted against T3 and C1, whose
    premises it violates.
    """
    if not members:
        raise InputError("verify_structure needs at least one member")
    perms = [check_permutation(m) for m in members]
    n = len(perms[0])
    if n < 3:
        raise InputError("structural checks need n >= 3")
    if any(len(m) != n for m in perms):
        raise InputError("members must all have the same length")

    verdicts = {cid: True for cid in CHECK_IDS}
    fails: list[tuple[str, tuple[int, ...]]] = []

    def record(cid: str, member: tuple[int, ...]) -> None:
        verdicts[cid] = False
        fails.append((cid, member))

    for member in perms:
        kind = classify_alternation(member)
        if kind is AlternationKind.NEITHER:
            record("T1-alternating", member)
            record("T3-parity", member)
            record("C1-classes", member)
        else:
            if not parity_separation_ok(member):
                record("T3-parity", member)
            if not parity_class_report(member).all_ok:
                record("C1-classes", member)
        if not endpoint_diff_ok(member):
            record("T2-endpoints", member)
        if not is_recursively_alternating(member, convention):
            record("T5-recursive", member)

    order = {cid: i for i, cid in enumerate(CHECK_IDS)}
    fails.sort(key=lambda item: (order[item[0]], item[1]))
    return StructureReport(n=n, verdicts=verdicts, counterexamples=fails)
