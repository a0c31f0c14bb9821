"""Thick Cantor sets: removing gaps of length alpha^n leaves positive measure.

Run: python3 demos/02_thick_cantor_sets.py
"""
from fractions import Fraction

from cantorkit import families as fam
from cantorkit.measures import gamma3_measure_profile
from cantorkit.oracle import verify_gamma3
from cantorkit.rational import fmt, paper_endpoint

p, q = 1, 4
table = fam.gamma3_endpoints(p, q, 2)
print(f"alpha = {p}/{q}, stage 2 endpoints in sixteenths:")
for k, (a, b) in enumerate(table.rows, start=1):
    print(f"  k={k}  [{paper_endpoint(a, q, 2)}, {paper_endpoint(b, q, 2)}]   exact [{fmt(a)}, {fmt(b)}]")

# The stage measure falls toward (1 - 3a) / (1 - 2a).
print("\nstage measures:")
for n, m in gamma3_measure_profile(p, q, 8):
    print(f"  n={n}  {fmt(m):>12s}  ~ {float(m):.6f}")
print(f"limit: {fmt(fam.gamma3_measure(p, q))}")

# A few more thick sets; alpha = 1/3 is the thin borderline.
for p2, q2 in [(1, 3), (1, 5), (1, 6), (2, 7), (3, 10)]:
    print(f"alpha={p2}/{q2}: measure {fmt(fam.gamma3_measure(p2, q2))}")

# The recursion is checked against plain middle-alpha deletion.
ok = all(r.equal for r in verify_gamma3(2, 7, 10))
print(f"\nrecursion vs. direct deletion for alpha=2/7, stages 0..10: {'equal' if ok else 'DIFFERENT'}")
print(f"interval length at stage 10: {fmt(fam.gamma3_interval_length(2, 7, 10))}"
      f" (times 2^10 = {float(2 ** 10 * fam.gamma3_interval_length(2, 7, 10)):.6f},"
      f" limit {float(Fraction(fam.gamma3_measure(2, 7))):.6f})")
