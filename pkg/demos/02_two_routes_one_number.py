"""
Two routes to one number
========================

The definitional route walks all 2^n - n*(n+1)/2 - 1 scoring subsequences;
the closed form answers in O(n^2) by weighting each strict peak and valley
by how many subsequences keep it a turn.  Neither route is trusted alone:
this script diffs them, exhaustively where that is affordable and on random
batches beyond.
"""

import math

import rollercoaster as rc

# --- every permutation up to n=6 ------------------------------------------

for n in range(1, 7):
    worst = max(
        rc.all_permutations(n),
        key=lambda p: abs(rc.t_fast(p) - rc.t_bruteforce(p)),
    )
    gap = rc.t_fast(worst) - rc.t_bruteforce(worst)
    print(f"n={n}: {math.factorial(n)} permutations, largest disagreement {gap}")
print()

# --- random batches where n! is out of reach -------------------------------
# oracle_diff runs both routes via the int64 batch engines (a vectorized
# subsequence walk against the vectorized closed form), re-checks a few
# rows with the scalar routes, and reports per-size case counts.

report = rc.oracle_diff(12, samples=2000, seed=7)
for n, cases in sorted(report.cases_by_n.items()):
    kind = "exhaustive" if math.factorial(n) == cases else "sampled"
    print(f"n={n}: {cases} cases ({kind})")
print(f"mismatches: {len(report.mismatches)}, scalar spot checks: {report.spot_checks}")
assert report.ok
print()

# --- growth of the two costs -----------------------------------------------
# The subsequence universe doubles per extra value; the closed form only
# gains one row and one column of comparisons.

print(f"{'n':>3} {'subsequences':>14} {'closed-form ops (~n^2)':>24}")
for n in (8, 12, 16, 20, 24):
    subs = 2**n - 1 - n - n * (n - 1) // 2
    print(f"{n:>3} {subs:>14} {n * n:>24}")

# t_bruteforce refuses sizes whose subsequence walk would never finish;
# the closed form keeps exact Python-int arithmetic at any size.
big = tuple(range(60, 0, -1))
print(f"\nt of the descending 60-sequence (closed form): {rc.t_fast(big)}")
try:
    rc.t_bruteforce(big)
except rc.CostBoundError as e:
    print(f"brute force refuses: {e}")
