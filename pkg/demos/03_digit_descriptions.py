"""Where digit descriptions and gap formulas part ways.

Two comparisons are measured here, not assumed. Each difference comes
with a rational witness that lies in exactly one of the two sets.

Run: python3 demos/03_digit_descriptions.py
"""
from fractions import Fraction

from cantorkit import families as fam
from cantorkit.intervals import contains_point
from cantorkit.oracle import digit_set_contains, verify_digit_characterization, verify_gamma2_formula
from cantorkit.rational import fmt

print("base-4 digits {0,3} against the printed gap formula ((4k+1)/4^n, (4k+2)/4^n):")
for r in verify_gamma2_formula(4, 3):
    print(f"  n={r.stage}: {'equal' if r.equal else 'differs, witness ' + fmt(r.witness)}")
half = Fraction(1, 2)
print(f"  1/2 in the {{0,3}} set? {digit_set_contains(fam.gamma2_digit_spec(4), half)}")
print(f"  1/2 in every printed-formula stage up to 6? "
      f"{all(contains_point(fam.gamma2_stage(4, n), half) for n in range(7))}")

print("\nwith the right gap end moved to (4k+3)/4^n the two agree:")
for n in range(0, 5):
    fixed = fam.gamma2_stage(4, n, conjectured_correction=True)
    print(f"  n={n}: {fixed == fam.digit_stage(fam.gamma2_digit_spec(4), n)}")

print("\nbase-6 digits {0,1,4,5} against the middle-third set:")
for r in verify_digit_characterization(1, 3, 3):
    print(f"  n={r.stage}: {'equal' if r.equal else 'differs, witness ' + fmt(r.witness)}")
w = Fraction(1, 12)
print(f"  1/12 = 0.00202..._3 is in the middle-third set: {digit_set_contains(fam.DigitIFS(3, (0, 2)), w)}")
print(f"  1/12 has a base-6 {{0,1,4,5}} expansion: {digit_set_contains(fam.gamma3_digit_spec(1, 3), w)}")
