"""Four ways to build the middle-third Cantor set, and a check that they agree.

Run: python3 demos/01_middle_third.py
"""
from cantorkit import families as fam
from cantorkit.oracle import verify_corollary
from cantorkit.rational import fmt


def show(s):
    return " ".join(f"[{fmt(iv.lo)},{fmt(iv.hi)}]" for iv in s.intervals)


# Stage 2, built four different ways.
n = 2
builds = {
    "odd-q gap formula, q=3": fam.gamma1_stage(3, n),
    "{0,q-1} gap formula, q=3": fam.gamma2_stage(3, n),
    "endpoint recursion, alpha=1/3": fam.gamma3_endpoints(1, 3, n).stage_set(),
    "digits {0,2} in base 3": fam.digit_stage(fam.DigitIFS(3, (0, 2)), n),
}
for name, s in builds.items():
    print(f"{name:32s} {show(s)}")

# The same comparison, exhaustively, up to stage 10.
reports = verify_corollary(10)
print(f"\n{len(reports)} pairwise comparisons over stages 0..10, all equal: {all(r.equal for r in reports)}")

# Lengths shrink by 2/3 each stage, so the limit set has measure zero.
for k in range(0, 7):
    print(f"stage {k}: length {fmt(fam.gamma1_stage(3, k).length)}")
