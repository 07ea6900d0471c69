"""
A tour of the statistic t, one permutation at a time
====================================================

t(p) is a sum over every subsequence of p with at least three values: each
subsequence contributes its number of maximal monotone runs.  A sequence
that keeps changing direction has many short runs, so permutations that
zigzag hard score high — and restricting to any subsequence of a high
scorer should still zigzag.  This script walks the definition on examples
small enough to enumerate in full.
"""

import rollercoaster as rc

# --- runs of a single sequence -------------------------------------------
# run_stats counts the maximal increasing / decreasing stretches of length
# at least two.  The zigzag 2,4,1,5,3 flips direction at every step, so
# every stretch is as short as possible and the counts are maximal.

for s in [(1, 2, 3, 4, 5), (2, 4, 1, 5, 3), (3, 4, 1, 2)]:
    st = rc.run_stats(s)
    print(f"{rc.format_permutation(s)}: inc={st.inc} dec={st.dec} id={st.id}")
print()

# --- the full sum, spelled out -------------------------------------------
# For n=4 the subsequence universe is tiny: four triples and the sequence
# itself.  Print every term of t(3,4,1,2).

p = (3, 4, 1, 2)
total = 0
for sub in rc.subsequences_at_least_3(p):
    st = rc.run_stats(sub)
    total += st.id
    print(f"  {','.join(map(str, sub))}  contributes {st.id}")
print(f"t({rc.format_permutation(p)}) = {total}")
assert total == rc.t_bruteforce(p) == rc.t_fast(p) == 11
print()

# --- a worked value that is easy to get wrong ----------------------------
# 1,3,2,4 has five subsequences; tabulating them by hand invites slips
# (a popular wrong total is 8).  The machine count settles it at 9.

q = (1, 3, 2, 4)
for sub in rc.subsequences_at_least_3(q):
    print(f"  {','.join(map(str, sub))}  contributes {rc.run_stats(sub).id}")
print(f"t({rc.format_permutation(q)}) = {rc.t_bruteforce(q)}")
print()

# --- symmetries -----------------------------------------------------------
# Reading a permutation backwards, or flipping values v -> n+1-v, relabels
# every subsequence without changing how often it turns, so t is invariant.

for s in [(2, 4, 1, 5, 3), (1, 3, 2, 4), (6, 2, 5, 1, 4, 3)]:
    t0 = rc.t_fast(s)
    assert t0 == rc.t_fast(rc.reverse(s)) == rc.t_fast(rc.complement(s))
    print(
        f"t={t0}: same for {rc.format_permutation(s)}, "
        f"reversed {rc.format_permutation(rc.reverse(s))}, "
        f"complemented {rc.format_permutation(rc.complement(s))}"
    )
