"""The devil's staircase, evaluated with exact brackets.

At stage n the distribution function of the self-similar measure is pinned
between two rationals. Points in a gap get the same value on both sides.

Run: python3 demos/04_staircase.py
"""
from fractions import Fraction

from cantorkit import families as fam
from cantorkit.measures import WeightVector, cdf_bounds, staircase_samples
from cantorkit.rational import fmt

cantor = fam.DigitIFS(3, (0, 2))
even = WeightVector.uniform(2)

# 1/4 is in the Cantor set (0.0202..._3), and F(1/4) = 1/3.
for n in (2, 5, 10, 20):
    b = cdf_bounds(cantor, even, Fraction(1, 4), n)
    print(f"F(1/4) at stage {n:2d}: [{fmt(b.lower)}, {fmt(b.upper)}]  width {float(b.width):.2e}")

# A coarse text plot of the staircase.
print()
rows = staircase_samples(cantor, even, 41, 12)
for x, b in rows[::4]:
    bar = "#" * round(40 * float(b.lower))
    print(f"x={float(x):.3f} {bar}")

# Skewed weights tilt the staircase; the thick alpha=1/4 set uses the same machinery.
skew = WeightVector.parse("1/3,2/3")
thick = fam.Gamma3(1, 4)
for x in (Fraction(1, 5), Fraction(1, 2), Fraction(4, 5)):
    b = cdf_bounds(thick, skew, x, 12)
    print(f"alpha=1/4, weights 1/3,2/3: F({fmt(x)}) in [{float(b.lower):.6f}, {float(b.upper):.6f}]")
