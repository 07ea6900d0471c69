"""Vectorized engines: score many permutations at once, on both t routes.

The scalar functions (``perms.t_bruteforce``, ``stats.t_fast``) stay the
reference implementations; everything here exists so the equivalence suites
and the exhaustive searches can chew through millions of permutations in
numpy instead of the Python interpreter.  Two engines, deliberately kept as
independent as their scalar counterparts:

- ``t_bruteforce_batch`` is the definitional route, vectorized: gather every
  position subset of size >= 3 and count direction changes.
- ``t_fast_batch`` is the turning-triple closed form, vectorized per middle
  position.

Both run in int64.  That is safe exactly when ``t_max_bound(n) < 2**63``
(every intermediate here is a nonnegative partial sum bounded by the final
total), and ``fits_int64`` checks that bound in exact Python arithmetic
before any engine runs; out of range, callers must fall back to the scalar
big-int routes.

``oracle_diff`` is the cross-validation driver used by the CLI and the test
suite: it compares the two batch engines over exhaustive or seeded-random
samples and additionally spot-checks a slice of every batch against the
*scalar* routes, so a bug shared by the numpy twins cannot hide.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import CostBoundError, InputError
from .perms import all_permutations, t_bruteforce
from .stats import baseline_count, t_fast, t_max_bound

DEFAULT_SEED = 20240 + 5
#: elements per intermediate gather in t_bruteforce_batch (keeps peak memory
#: around tens of MB regardless of batch shape)
_GATHER_BUDGET = 1 << 24


def fits_int64(n: int) -> bool:
    """True iff every t value (and partial sum) at size n fits in int64.

    >>> fits_int64(10), fits_int64(200)
    (True, False)
    """
    return n >= 1 and t_max_bound(n) < 2**63


def _require_batch(batch: np.ndarray) -> tuple[int, int]:
    if batch.ndim != 2:
        raise InputError(f"batch must be 2-D (rows are permutations), got shape {batch.shape}")
    m, n = batch.shape
    if n < 1:
        raise InputError("batch rows must be nonempty")
    if not fits_int64(n):
        raise InputError(f"n={n} exceeds the int64 engine range; use the scalar routes")
    return m, n


@lru_cache(maxsize=None)
def _position_subsets(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) as a (C(n,k), k) index array."""
    combos = list(itertools.combinations(range(n), k))
    return np.array(combos, dtype=np.intp).reshape(len(combos), k)


def t_bruteforce_batch(batch: np.ndarray) -> np.ndarray:
    """Definitional t for every row: walk all subsequences, count changes.

    ``batch`` is (m, n) with each row a permutation of 1..n; returns (m,)
    int64.  id(tau) = 1 + direction changes, so the subset count baseline is
    added once and only the changes are summed per subset.
    """
    m, n = _require_batch(batch)
    totals = np.full(m, baseline_count(n), dtype=np.int64)
    if n < 3 or m == 0:
        return totals
    for k in range(3, n + 1):
        subsets = _position_subsets(n, k)
        rows_per_chunk = max(1, _GATHER_BUDGET // (subsets.shape[0] * k))
        for lo in range(0, m, rows_per_chunk):
            sub = batch[lo : lo + rows_per_chunk, subsets]  # (rows, C, k)
            up = sub[:, :, 1:] > sub[:, :, :-1]
            changes = up[:, :, 1:] != up[:, :, :-1]
            totals[lo : lo + rows_per_chunk] += changes.sum(axis=(1, 2), dtype=np.int64)
    return totals


def t_fast_batch(batch: np.ndarray) -> np.ndarray:
    """Closed-form t for every row, O(m * n^2).

    Per middle position q: weight-sum the smaller/larger values before q with
    2^pos and after q with 2^(n-1-pos); peaks pair smaller-smaller, valleys
    larger-larger.  Complement counts come from the full weight sums, so one
    comparison matrix per side suffices.
    """
    m, n = _require_batch(batch)
    totals = np.full(m, baseline_count(n), dtype=np.int64)
    if n < 3 or m == 0:
        return totals
    pw_lo = (1 << np.arange(n, dtype=np.uint64)).astype(np.int64)  # 2^pos
    pw_hi = pw_lo[::-1].copy()  # 2^(n-1-pos)
    for q in range(1, n - 1):
        vq = batch[:, q : q + 1]
        lo_before = (batch[:, :q] < vq).astype(np.int64) @ pw_lo[:q]
        hi_before = int(pw_lo[:q].sum()) - lo_before
        lo_after = (batch[:, q + 1 :] < vq).astype(np.int64) @ pw_hi[q + 1 :]
        hi_after = int(pw_hi[q + 1 :].sum()) - lo_after
        totals += lo_before * lo_after + hi_before * hi_after
    return totals


def sample_permutations(n: int, count: int, seed: int) -> np.ndarray:
    """``count`` independent uniform permutations of 1..n, seeded, as (count, n).

    The stream is a pure function of (n, count, seed); identical across runs
    and platforms for a given numpy major line.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if count < 0:
        raise InputError(f"count must be >= 0, got {count}")
    rng = np.random.default_rng([seed, n])
    dtype = np.int8 if n <= 127 else np.int64
    base = np.tile(np.arange(1, n + 1, dtype=dtype), (count, 1))
    return rng.permuted(base, axis=1)


def iter_sn_batches(n: int, chunk_rows: int = 1 << 16) -> Iterator[np.ndarray]:
    """All of S_n in lexicographic order, as (<=chunk_rows, n) arrays."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    dtype = np.int8 if n <= 127 else np.int64
    stream = all_permutations(n)
    while True:
        block = list(itertools.islice(stream, chunk_rows))
        if not block:
            return
        flat = np.fromiter(
            itertools.chain.from_iterable(block), dtype=dtype, count=len(block) * n
        )
        yield flat.reshape(len(block), n)


@dataclass
class OracleDiffReport:
    """Outcome of one equivalence sweep between the two t routes.

    ``mismatches`` rows are (permutation, definitional t, closed-form t);
    the sweep is a pass iff the list is empty.  ``spot_checks`` counts the
    rows that were *additionally* recomputed with the scalar reference
    implementations (any scalar disagreement also lands in ``mismatches``).
    """

    cases_by_n: dict[int, int] = field(default_factory=dict)
    mismatches: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    spot_checks: int = 0

    @property
    def cases(self) -> int:
        return sum(self.cases_by_n.values())

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "cases": self.cases,
            "cases_by_n": {str(n): c for n, c in sorted(self.cases_by_n.items())},
            "spot_checks": self.spot_checks,
            "mismatches": [
                {
                    "permutation": ",".join(str(v) for v in p),
                    "t_bruteforce": str(tb),
                    "t_fast": str(tf),
                }
                for p, tb, tf in self.mismatches
            ],
            "ok": self.ok,
        }


_MISMATCH_CAP = 100
_EXHAUSTIVE_MAX = 7  # sizes up to here are swept in full; above, seeded samples
DIFF_LIMIT = 16  # definitional route walks 2^n subsets per row
DIFF_HARD_LIMIT = 20


def _diff_batch(arr: np.ndarray, spot: int, report: OracleDiffReport) -> None:
    tb = t_bruteforce_batch(arr)
    tf = t_fast_batch(arr)
    bad = np.nonzero(tb != tf)[0]
    for i in bad[:_MISMATCH_CAP]:
        report.mismatches.append((tuple(int(v) for v in arr[i]), int(tb[i]), int(tf[i])))
    # scalar reference spot checks on the leading rows of the batch
    for i in range(min(spot, arr.shape[0])):
        p = tuple(int(v) for v in arr[i])
        sb, sf = t_bruteforce(p), t_fast(p)
        report.spot_checks += 1
        if sb != int(tb[i]) or sf != int(tf[i]):
            report.mismatches.append((p, sb, sf))


def oracle_diff(
    n_max: int,
    *,
    samples: int = 10_000,
    seed: int = DEFAULT_SEED,
    spot: int = 8,
    allow_large: bool = False,
) -> OracleDiffReport:
    """Compare the two t routes: exhaustively for n <= 7, sampled above.

    Every size from 1 through ``n_max`` is covered (sizes below 3 are trivial
    but free, and catch degenerate-case regressions).  Sampled sizes draw
    ``samples`` seeded permutations each.  ``spot`` rows per batch are also
    recomputed with the scalar reference routes.  The definitional route
    costs 2^n per row, hence the guard on n_max (20 is a hard cap even with
    ``allow_large``).
    """
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    if samples < 1:
        raise InputError(f"samples must be >= 1, got {samples}")
    if n_max > DIFF_HARD_LIMIT or (n_max > DIFF_LIMIT and not allow_large):
        raise CostBoundError(
            f"oracle diff walks ~2^n subsets per permutation; n_max={n_max} is over the "
            f"guard ({DIFF_LIMIT}, hard cap {DIFF_HARD_LIMIT})"
        )
    report = OracleDiffReport()
    for n in range(1, n_max + 1):
        if n <= _EXHAUSTIVE_MAX:
            count = 0
            for arr in iter_sn_batches(n):
                _diff_batch(arr, spot, report)
                count += arr.shape[0]
            report.cases_by_n[n] = count
        else:
            arr = sample_permutations(n, samples, seed)
            _diff_batch(arr, spot, report)
            report.cases_by_n[n] = samples
    return report
