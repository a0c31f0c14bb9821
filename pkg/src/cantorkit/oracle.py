"""Independent-route equivalence checks between family constructions.

Comparisons never raise on a mismatch: a difference between two routes is
returned as data (a :class:`ComparisonReport` with a witness point), so a
mismatch between two descriptions and a bug in this package look different
to callers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import families as fam
from .intervals import IntervalSet, contains_point, difference, from_json, to_json_obj
from .rational import fmt, parse


@dataclass(frozen=True)
class ComparisonReport:
    left_label: str
    right_label: str
    stage: int
    equal: bool
    left_minus_right: IntervalSet
    right_minus_left: IntervalSet
    witness: Optional[Fraction] = None

    def to_dict(self) -> dict:
        return {
            "left_label": self.left_label,
            "right_label": self.right_label,
            "stage": self.stage,
            "equal": self.equal,
            "left_minus_right": to_json_obj(self.left_minus_right),
            "right_minus_left": to_json_obj(self.right_minus_left),
            "witness": None if self.witness is None else fmt(self.witness),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonReport":
        return cls(
            d["left_label"], d["right_label"], int(d["stage"]), bool(d["equal"]),
            from_json(d["left_minus_right"]), from_json(d["right_minus_left"]),
            None if d["witness"] is None else parse(d["witness"]),
        )


def compare_stages(a: IntervalSet, b: IntervalSet, left_label: str = "left",
                   right_label: str = "right", stage: int = -1) -> ComparisonReport:
    """Exact symmetric difference of two canonical sets.

    The witness is the midpoint of the leftmost component of either
    difference, which lies in exactly one of the two sets.
    """
    lmr = difference(a, b)
    rml = difference(b, a)
    comps = [c for c in (lmr.intervals[:1] + rml.intervals[:1])]
    witness = None
    if comps:
        first = min(comps, key=lambda c: (c.lo, c.hi))
        witness = (first.lo + first.hi) / 2
    return ComparisonReport(left_label, right_label, stage, not lmr and not rml,
                            lmr, rml, witness)


def verify_gamma3(p: int, q: int, n_max: int) -> list[ComparisonReport]:
    """Endpoint recursion against direct middle-alpha deletion, stages 0..n_max."""
    fam.Gamma3(p, q)
    return [
        compare_stages(fam.gamma3_stage(p, q, n), fam.nested_middle_alpha_stage(p, q, n),
                       f"gamma3-endpoints(p={p},q={q})", f"nested-middle-alpha(p={p},q={q})", n)
        for n in range(n_max + 1)
    ]


def verify_digit_characterization(p: int, q: int, n_max: int) -> list[ComparisonReport]:
    """The base-2q digit system against direct middle-alpha deletion (a measurement)."""
    spec = fam.gamma3_digit_spec(p, q)
    return [
        compare_stages(fam.digit_stage(spec, n), fam.nested_middle_alpha_stage(p, q, n),
                       str(spec), f"nested-middle-alpha(p={p},q={q})", n)
        for n in range(n_max + 1)
    ]


def verify_gamma2_formula(q: int, n_max: int) -> list[ComparisonReport]:
    """The printed {0, q-1} gap formula against the {0, q-1} digit system."""
    spec = fam.gamma2_digit_spec(q)
    return [
        compare_stages(fam.gamma2_stage(q, n), fam.digit_stage(spec, n),
                       f"gamma2-gaps(q={q})", str(spec), n)
        for n in range(n_max + 1)
    ]


def verify_corollary(n_max: int) -> list[ComparisonReport]:
    """The four middle-third constructions, pairwise, at every stage 0..n_max."""
    out = []
    for n in range(n_max + 1):
        sets = {
            "gamma1-gaps(q=3)": fam.gamma1_stage(3, n),
            "gamma2-gaps(q=3)": fam.gamma2_stage(3, n),
            "gamma3-endpoints(p=1,q=3)": fam.gamma3_stage(1, 3, n),
            "digit:base=3,A=0,2": fam.digit_stage(fam.DigitIFS(3, (0, 2)), n),
        }
        labels = list(sets)
        for i, left in enumerate(labels):
            for right in labels[i + 1:]:
                out.append(compare_stages(sets[left], sets[right], left, right, n))
    return out


# -- membership of rationals in the limit digit set -------------------------

def digit_set_contains(spec: fam.DigitIFS, x) -> bool:
    """Decide whether rational ``x`` has an expansion using only alphabet digits.

    The remainders ``base^m x - (integer)`` of a rational with denominator b
    stay in ``{0, 1/b, ..., 1}``, so the expansions form a finite graph; ``x``
    belongs to the limit set iff some infinite path leaves it.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        return False
    succ: dict[Fraction, list[Fraction]] = {}
    todo = [x]
    while todo:
        r = todo.pop()
        if r in succ:
            continue
        succ[r] = [rest for _, rest in fam._digit_steps(r, spec.base, spec.alphabet)]
        todo.extend(succ[r])
    # prune states with no way to continue forever
    alive = set(succ)
    changed = True
    while changed:
        changed = False
        for r in list(alive):
            if not any(s in alive for s in succ[r]):
                alive.discard(r)
                changed = True
    return x in alive


def exhaustive_digit_membership(spec: fam.DigitIFS,
                                denominator_bound: int) -> list[tuple[Fraction, bool]]:
    """Membership verdicts for every reduced ``a/b`` in [0, 1] with ``b <= bound``."""
    if denominator_bound < 1:
        raise ValueError("denominator_bound must be >= 1")
    out = []
    for b in range(1, denominator_bound + 1):
        for a in range(0, b + 1):
            if math.gcd(a, b) == 1:
                x = Fraction(a, b)
                out.append((x, digit_set_contains(spec, x)))
    out.sort(key=lambda t: t[0])
    return out
