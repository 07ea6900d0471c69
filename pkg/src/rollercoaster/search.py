"""Enumeration of the maximizer sets RC(n), exhaustive and pruned.

RC(n) is the set of permutations of [n] attaining the maximum of t over the
whole of S_n.  Two independent modes compute it:

- ``exhaustive``: walk all n! permutations and take the argmax.  Ground
  truth, cost n! * n^2.
- ``pruned``: walk only the candidates consistent with the structural
  constraints that provably hold for maximizers (alternation, endpoint pair,
  value classes, recursive alternation), i.e. ``generate_candidates`` for
  both alternation kinds.  Orders of magnitude smaller, correct only insofar
  as the structural results hold — which is exactly what the cross-mode
  acceptance checks pin down.

Ties all belong to the result: ``members`` is the full sorted maximizer
list, never a single witness.

Work splits into :class:`SearchShard` cells keyed by a leading-value prefix;
``run_shard`` evaluates one cell and ``merge`` folds partial results, is
associative and commutative, so any reduction tree (including the trivial
single-shard one) yields the identical RCResult.  Scoring uses the int64
batch engine whenever the size fits (see ``batch.fits_int64``) and falls
back to exact scalar arithmetic beyond it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Sequence

import numpy as np

from .batch import fits_int64, t_fast_batch
from .errors import CostBoundError, InputError, VerificationError
from .perms import check_permutation, t_bruteforce
from .stats import t_fast
from .structure import (
    AlternationKind,
    case_value_sets,
    classify_alternation,
    is_recursively_alternating,
)

EXHAUSTIVE_LIMIT = 11  # n! * n^2 work; ~11 is minutes territory
PRUNED_LIMIT = 16  # candidate count grows like 4 * ((n/2 - 1)!)^2
PARANOID_LIMIT = 12  # t_bruteforce re-check of members stays cheap up to here

MODES = ("exhaustive", "pruned")

_CHUNK_ROWS = 1 << 16


@dataclass(frozen=True)
class RCResult:
    """Maximizer set for one n: the max t, every permutation attaining it,
    and how the search was run.

    ``max_t`` is None only in intermediate partial results for cells that
    scored nothing; every public result has a real maximum.  ``explored``
    counts the candidates actually scored.
    """

    n: int
    max_t: int | None
    members: tuple[tuple[int, ...], ...]
    mode: str
    explored: int

    def validate(self) -> "RCResult":
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.max_t is None or not self.members:
            raise InputError("result holds no maximizer")
        if self.max_t < 0 or self.explored < len(self.members):
            raise InputError("inconsistent counts in result")
        for m in self.members:
            if len(check_permutation(m)) != self.n:
                raise InputError(f"member {m!r} is not a permutation of 1..{self.n}")
        if list(self.members) != sorted(set(self.members)):
            raise InputError("members must be sorted and duplicate-free")
        return self

    def to_json_dict(self) -> dict:
        """Stable JSON shape; counts serialize as decimal strings."""
        return {
            "n": self.n,
            "max_t": None if self.max_t is None else str(self.max_t),
            "count": len(self.members),
            "members": [",".join(str(v) for v in m) for m in self.members],
            "mode": self.mode,
            "explored": str(self.explored),
        }


@dataclass(frozen=True)
class SearchShard:
    """One unit of search work: the candidates whose leading values equal
    ``prefix`` (empty prefix = the whole space).  Shards from one plan are
    disjoint and jointly exhaustive.  ``recursive_filter`` only affects
    pruned mode."""

    n: int
    prefix: tuple[int, ...]
    mode: str
    recursive_filter: bool = True


def generate_candidates(n: int, kind: AlternationKind) -> Iterator[tuple[int, ...]]:
    """Stream the permutations consistent with the value-class case (n, kind).

    Endpoints take their prescribed pair in both orders (ascending first);
    the low and high classes run over all arrangements of their prescribed
    interior positions, odd-class arrangements outermost, in lexicographic
    order.  The stream is filtered to the kind's alternation pattern as a
    final belt — the class structure already forces the pattern, so the
    filter should never fire; it is kept so a bug upstream cannot silently
    widen the candidate set.

    >>> sorted(generate_candidates(4, AlternationKind.ALTERNATING))
    [(2, 4, 1, 3), (3, 4, 1, 2)]
    """
    if n < 4:
        raise InputError(f"candidate generation needs n >= 4, got {n}")
    if kind is AlternationKind.NEITHER:
        raise InputError("candidate generation needs an alternation kind")
    ends, odd_cls, even_cls = case_value_sets(n, kind)
    odd_pos = tuple(j for j in range(2, n) if j % 2 == 1)
    even_pos = tuple(j for j in range(2, n) if j % 2 == 0)
    lo_end, hi_end = sorted(ends)
    for e1, en in ((lo_end, hi_end), (hi_end, lo_end)):
        for odd_arr in itertools.permutations(sorted(odd_cls)):
            for even_arr in itertools.permutations(sorted(even_cls)):
                vals = [0] * n
                vals[0], vals[n - 1] = e1, en
                for j, v in zip(odd_pos, odd_arr):
                    vals[j - 1] = v
                for j, v in zip(even_pos, even_arr):
                    vals[j - 1] = v
                p = tuple(vals)
                if classify_alternation(p) is kind:
                    yield p


def _candidate_stream(n: int, recursive_filter: bool) -> Iterator[tuple[int, ...]]:
    stream = itertools.chain(
        generate_candidates(n, AlternationKind.ALTERNATING),
        generate_candidates(n, AlternationKind.REVERSE_ALTERNATING),
    )
    if recursive_filter:
        stream = (p for p in stream if is_recursively_alternating(p))
    return stream


def _argmax_tuples(perms: Iterable[tuple[int, ...]], n: int) -> tuple[int | None, list, int]:
    """Score a tuple stream, batched in int64 when the size allows."""
    best: int | None = None
    members: list[tuple[int, ...]] = []
    explored = 0
    if fits_int64(n):
        dtype = np.int8 if n <= 127 else np.int64
        it = iter(perms)
        while True:
            block = list(itertools.islice(it, _CHUNK_ROWS))
            if not block:
                break
            arr = np.fromiter(
                itertools.chain.from_iterable(block), dtype=dtype, count=len(block) * n
            ).reshape(len(block), n)
            ts = t_fast_batch(arr)
            explored += len(block)
            mx = int(ts.max())
            if best is None or mx > best:
                best = mx
                members = []
            if mx == best:
                members.extend(tuple(int(v) for v in row) for row in arr[ts == mx])
    else:
        for p in perms:
            t = t_fast(p)
            explored += 1
            if best is None or t > best:
                best, members = t, [p]
            elif t == best:
                members.append(p)
    return best, members, explored


def plan_shards(
    n: int, mode: str, shard_count: int, *, recursive_filter: bool = True
) -> list[SearchShard]:
    """Partition the (n, mode) search space into at least ``shard_count``
    disjoint prefix cells (when the space has that many; never more than
    prefix length 3).

    The cells of one plan are mutually disjoint and cover the space, so
    folding their ``run_shard`` results with ``merge`` in any order
    reproduces the single-shard result exactly.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    if shard_count < 1:
        raise InputError(f"shard_count must be >= 1, got {shard_count}")
    if mode == "exhaustive" and n < 3:
        raise InputError(f"exhaustive search needs n >= 3, got {n}")
    if mode == "pruned" and n < 4:
        raise InputError(f"pruned search needs n >= 4, got {n}")

    def cells(length: int) -> list[tuple[int, ...]]:
        if length == 0:
            return [()]
        if mode == "exhaustive":
            return sorted(itertools.permutations(range(1, n + 1), length))
        prefixes: set[tuple[int, ...]] = set()
        for kind in (AlternationKind.ALTERNATING, AlternationKind.REVERSE_ALTERNATING):
            ends, odd_cls, even_cls = case_value_sets(n, kind)
            heads: list[tuple[int, ...]] = [(e,) for e in sorted(ends)]
            for j in range(2, length + 1):
                cls = sorted(even_cls if j % 2 == 0 else odd_cls)
                heads = [h + (v,) for h in heads for v in cls if v not in h]
            prefixes.update(heads)
        return sorted(prefixes)

    chosen = [()]
    for length in range(0, min(3, n - 1) + 1):
        chosen = cells(length)
        if len(chosen) >= shard_count:
            break
    return [
        SearchShard(n=n, prefix=p, mode=mode, recursive_filter=recursive_filter)
        for p in chosen
    ]


def run_shard(shard: SearchShard, *, allow_large: bool = False) -> RCResult:
    """Evaluate one cell: argmax of t over the candidates matching the prefix.

    Returns a partial RCResult (``max_t`` None if the cell scored nothing,
    possible for pruned cells emptied by the recursive filter).
    """
    n = shard.n
    if shard.mode not in MODES:
        raise InputError(f"unknown mode {shard.mode!r}")
    L = len(shard.prefix)
    if L > n or len(set(shard.prefix)) != L or not all(1 <= v <= n for v in shard.prefix):
        raise InputError(f"malformed prefix {shard.prefix!r} for n={n}")
    if shard.mode == "exhaustive":
        if n < 3:
            raise InputError(f"exhaustive search needs n >= 3, got {n}")
        if n > EXHAUSTIVE_LIMIT and not allow_large:
            raise CostBoundError(
                f"exhaustive search over S_{n} walks {n}! permutations; "
                f"the allow-large override forces it"
            )
        rest = sorted(set(range(1, n + 1)) - set(shard.prefix))
        stream: Iterable[tuple[int, ...]] = (
            shard.prefix + tail for tail in itertools.permutations(rest)
        )
    else:
        if n < 4:
            raise InputError(f"pruned search needs n >= 4, got {n}")
        if n > PRUNED_LIMIT and not allow_large:
            raise CostBoundError(
                f"pruned search at n={n} exceeds the guard; the allow-large override forces it"
            )
        stream = (
            p for p in _candidate_stream(n, shard.recursive_filter) if p[:L] == shard.prefix
        )
    best, members, explored = _argmax_tuples(stream, n)
    return RCResult(
        n=n, max_t=best, members=tuple(sorted(set(members))), mode=shard.mode, explored=explored
    )


def merge(a: RCResult, b: RCResult) -> RCResult:
    """Fold two partial results from one plan: keep the larger max, union
    members on a tie, add explored counts.  Associative and commutative."""
    if a.n != b.n or a.mode != b.mode:
        raise InputError(f"cannot merge results for (n={a.n}, {a.mode}) and (n={b.n}, {b.mode})")
    explored = a.explored + b.explored
    if a.max_t is None:
        winner = b
    elif b.max_t is None or a.max_t > b.max_t:
        winner = a
    elif b.max_t > a.max_t:
        winner = b
    else:
        members = tuple(sorted(set(a.members) | set(b.members)))
        return RCResult(n=a.n, max_t=a.max_t, members=members, mode=a.mode, explored=explored)
    return replace(winner, explored=explored)


def _run_plan(shards: Sequence[SearchShard], *, allow_large: bool) -> RCResult:
    results = [run_shard(s, allow_large=allow_large) for s in shards]
    out = results[0]
    for r in results[1:]:
        out = merge(out, r)
    return out.validate()


def enumerate_rc_exhaustive(
    n: int, *, shard_count: int = 1, allow_large: bool = False, paranoid: bool = False
) -> RCResult:
    """RC(n) by brute strength: argmax of t over all of S_n.

    ``paranoid`` re-scores every member with the definitional oracle
    afterwards and raises if anything disagrees — a tripwire for the fast
    path, affordable up to n=12.

    >>> enumerate_rc_exhaustive(3).members
    ((1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2))
    """
    if paranoid and n > PARANOID_LIMIT:
        raise CostBoundError(f"paranoid re-check is capped at n={PARANOID_LIMIT}")
    result = _run_plan(
        plan_shards(n, "exhaustive", shard_count), allow_large=allow_large
    )
    assert result.explored == math.factorial(n)
    if paranoid:
        for m in result.members:
            if t_bruteforce(m) != result.max_t:
                raise VerificationError(
                    f"fast path disagrees with the oracle on {m!r}"
                )
    return result


def enumerate_rc_pruned(
    n: int,
    *,
    shard_count: int = 1,
    recursive_filter: bool = True,
    allow_large: bool = False,
) -> RCResult:
    """RC(n) over the structurally constrained candidate set only.

    Exactness relative to ``enumerate_rc_exhaustive`` is an empirical claim
    cross-checked by the acceptance suite, not something this function can
    promise by itself.

    >>> enumerate_rc_pruned(5).members == enumerate_rc_exhaustive(5).members
    True
    """
    return _run_plan(
        plan_shards(n, "pruned", shard_count, recursive_filter=recursive_filter),
        allow_large=allow_large,
    )
