"""
What a maximizer must look like
===============================

Every member of RC(n) passes five machine checks: it alternates
(T1-alternating), its endpoints are consecutive values (T2-endpoints), its
odd-position values sit entirely below or above its even-position values
(T3-parity), each position class carries one specific value set
(C1-classes), and the alternation survives recursive interior splitting
(T5-recursive).  This script takes one member apart, then runs the full
battery over RC(3..8).
"""

import rollercoaster as rc

# --- one member under the microscope ----------------------------------------

p = rc.enumerate_rc_exhaustive(7).members[0]
print(f"member of RC(7): {rc.format_permutation(p)}")
print(f"  alternation: {rc.classify_alternation(p).value}")
print(f"  |first - last| = {abs(p[0] - p[-1])}  (endpoint check: {rc.endpoint_diff_ok(p)})")

rep = rc.parity_class_report(p)
print(f"  case {rep.case}:")
print(f"    endpoints {sorted(rep.actual_endpoints)}  expected {sorted(rep.expected_endpoints)}")
print(f"    odd-position values {sorted(rep.actual_odd)}  expected {sorted(rep.expected_odd)}")
print(f"    even-position values {sorted(rep.actual_even)}  expected {sorted(rep.expected_even)}")

# The interior parity split keeps producing alternating sequences all the
# way down — that is the recursive check.

level, seq = 0, p
while len(seq) > 2:
    odd, even = rc.split_odd_even(seq)
    print(f"  level {level}: {seq} -> odd part {odd}, even part {even}")
    level, seq = level + 1, max(odd, even, key=len)
print(f"  recursively alternating: {rc.is_recursively_alternating(p)}")
print()

# --- near misses --------------------------------------------------------------
# Alternating is necessary, nowhere near sufficient: 1,3,2,4 alternates but
# flunks the endpoint and class checks, and scores t=9 against the max 11.

report = rc.verify_structure(((1, 3, 2, 4),))
for cid, ok in report.verdicts.items():
    print(f"  {cid}: {'pass' if ok else 'FAIL'} on 1,3,2,4")
print()

# --- the full battery over RC(3..8) -------------------------------------------

for n in range(3, 9):
    members = rc.enumerate_rc_exhaustive(n).members
    report = rc.verify_structure(members)
    inherited = report.all_pass
    rebased = rc.verify_structure(members, convention="rebased").all_pass
    line = " ".join(f"{cid.split('-')[0]}:{'ok' if v else 'FAIL'}" for cid, v in report.verdicts.items())
    print(f"n={n} ({len(members)} members): {line}  conventions agree: {inherited == rebased}")
