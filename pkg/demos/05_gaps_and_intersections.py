"""Gap statistics, a thickness proxy, and overlap under translation.

Run: python3 demos/05_gaps_and_intersections.py
"""
from fractions import Fraction

from cantorkit import families as fam
from cantorkit.analysis import gap_statistics, spec_dimension, thickness_proxy, translation_sweep
from cantorkit.rational import fmt

specs = [fam.DigitIFS(3, (0, 2)), fam.Gamma1(5), fam.Gamma3(1, 4), fam.Gamma3(2, 7)]
for spec in specs:
    s = fam.stage_set(spec, 5)
    st = gap_statistics(s, stage=5)
    hist = ", ".join(f"{fmt(length)} x{count}" for length, count in st.histogram[:3])
    print(f"{str(spec):22s} gaps {st.count:3d}  removed {float(st.total_gap):.4f}  "
          f"thickness {fmt(thickness_proxy(s))}  largest: {hist}")

print(f"\ndimension of the middle-third set: {spec_dimension(specs[0]).decimal}")
print(f"dimension of the base-5 even-digit set: {spec_dimension(specs[1]).decimal}")

# Slide a copy of the set across itself and watch the overlap.
print("\nmiddle third against a shifted copy, stage 6:")
ts = [Fraction(i, 12) for i in range(13)]
for t, length, comps in translation_sweep(specs[0], specs[0], ts, 6):
    print(f"  t={fmt(t):>5s}  overlap {float(length):.5f}  pieces {comps}")

# Thick sets overlap far more.
print("\nalpha=1/4 against a shifted copy, stage 6:")
for t, length, comps in translation_sweep(specs[2], specs[2], ts[::3], 6):
    print(f"  t={fmt(t):>5s}  overlap {float(length):.5f}  pieces {comps}")
