import math

import numpy as np
import pytest

import rollercoaster as rc
from rollercoaster import batch
from rollercoaster.errors import CostBoundError, InputError


@pytest.mark.parametrize("n", range(1, 10))
def test_batch_engines_match_scalar(n):
    arr = rc.sample_permutations(n, 64, seed=7)
    fast = rc.t_fast_batch(arr)
    brute = rc.t_bruteforce_batch(arr)
    for i in range(arr.shape[0]):
        p = tuple(int(v) for v in arr[i])
        assert int(fast[i]) == rc.t_fast(p)
        assert int(brute[i]) == rc.t_bruteforce(p)


def test_batch_engines_agree_on_larger_sizes():
    for n in (11, 13):
        arr = rc.sample_permutations(n, 500, seed=3)
        assert np.array_equal(rc.t_fast_batch(arr), rc.t_bruteforce_batch(arr))


def test_gather_chunking_does_not_change_results(monkeypatch):
    arr = rc.sample_permutations(7, 40, seed=1)
    whole = rc.t_bruteforce_batch(arr)
    monkeypatch.setattr(batch, "_GATHER_BUDGET", 256)  # force many tiny chunks
    assert np.array_equal(rc.t_bruteforce_batch(arr), whole)


def test_batch_input_validation():
    with pytest.raises(InputError):
        rc.t_fast_batch(np.arange(6))
    with pytest.raises(InputError):
        rc.t_bruteforce_batch(np.zeros((2, 0), dtype=np.int8))


def test_empty_batch():
    arr = np.empty((0, 5), dtype=np.int8)
    assert rc.t_fast_batch(arr).shape == (0,)
    assert rc.t_bruteforce_batch(arr).shape == (0,)


def test_trivial_sizes_score_zero():
    arr = np.array([[1, 2], [2, 1]], dtype=np.int8)
    assert rc.t_fast_batch(arr).tolist() == [0, 0]
    assert rc.t_bruteforce_batch(arr).tolist() == [0, 0]


def test_fits_int64_matches_exact_bound():
    for n in range(1, 60):
        assert rc.fits_int64(n) == (rc.t_max_bound(n) < 2**63)
    assert rc.fits_int64(10)
    assert not rc.fits_int64(120)
    assert not rc.fits_int64(0)


def test_engines_refuse_out_of_range_n():
    wide = np.tile(np.arange(1, 101, dtype=np.int64), (2, 1))
    with pytest.raises(InputError):
        rc.t_fast_batch(wide)


def test_sample_permutations_determinism_and_validity():
    a = rc.sample_permutations(9, 50, seed=42)
    b = rc.sample_permutations(9, 50, seed=42)
    c = rc.sample_permutations(9, 50, seed=43)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    expected = np.arange(1, 10)
    for row in a:
        assert np.array_equal(np.sort(row), expected)
    with pytest.raises(InputError):
        rc.sample_permutations(0, 5, seed=1)
    with pytest.raises(InputError):
        rc.sample_permutations(5, -1, seed=1)


@pytest.mark.parametrize("chunk", [7, 64, 10_000])
def test_iter_sn_batches_covers_sn_in_order(chunk):
    rows = []
    for arr in batch.iter_sn_batches(4, chunk_rows=chunk):
        assert arr.shape[0] <= chunk
        rows.extend(tuple(int(v) for v in r) for r in arr)
    assert rows == list(rc.all_permutations(4))
    assert len(rows) == math.factorial(4)


def test_oracle_diff_small_sweep():
    report = rc.oracle_diff(5, samples=10, spot=2)
    assert report.ok
    assert report.cases_by_n == {1: 1, 2: 2, 3: 6, 4: 24, 5: 120}
    assert report.cases == 153
    assert report.spot_checks > 0
    doc = report.to_json_dict()
    assert doc["ok"] is True and doc["mismatches"] == []


def test_oracle_diff_sampled_sizes_deterministic():
    a = rc.oracle_diff(8, samples=50, seed=11, spot=0)
    b = rc.oracle_diff(8, samples=50, seed=11, spot=0)
    assert a.cases_by_n == b.cases_by_n == {**{n: math.factorial(n) for n in range(1, 8)}, 8: 50}
    assert a.ok and b.ok


def test_oracle_diff_guards():
    with pytest.raises(InputError):
        rc.oracle_diff(0)
    with pytest.raises(InputError):
        rc.oracle_diff(5, samples=0)
    with pytest.raises(CostBoundError):
        rc.oracle_diff(17, samples=1)
    with pytest.raises(CostBoundError):
        rc.oracle_diff(21, samples=1, allow_large=True)  # hard cap
