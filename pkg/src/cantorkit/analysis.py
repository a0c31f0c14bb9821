"""Finite-stage geometry: similarity dimension, gap statistics, a bridge/gap
thickness proxy, and intersections of a stage set with a translated copy."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional

from . import families as fam
from .intervals import ClosedInterval, IntervalSet, gaps_within, intersect, total_length, translate
from .rational import fmt


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class Dimension:
    """``log(maps) / log(ratio_reciprocal)``; the two log arguments stay exact."""

    maps: int
    ratio_reciprocal: int
    decimal: str

    @property
    def value(self) -> float:
        return float(self.decimal)


def hausdorff_dimension(maps: int, ratio_reciprocal: int, precision: int = 6) -> Dimension:
    if maps < 2 or ratio_reciprocal < 2:
        raise DomainError("need at least two maps and ratio 1/r >= 2")
    if maps > ratio_reciprocal:
        raise DomainError(f"{maps} maps of ratio 1/{ratio_reciprocal} overlap")
    with localcontext() as ctx:
        ctx.prec = precision + 20
        value = Decimal(maps).ln() / Decimal(ratio_reciprocal).ln()
        text = str(value.quantize(Decimal(1).scaleb(-precision)))
    return Dimension(maps, ratio_reciprocal, text)


def similarity_data(spec) -> tuple[int, int]:
    """``(K, 1/r)`` for families generated by K maps of one common ratio r."""
    if isinstance(spec, fam.Gamma3):
        if spec.alpha == Fraction(1, 3):
            return 2, 3
        raise DomainError(f"{spec}: gap lengths alpha^n are not one similarity ratio "
                          "(the set has positive measure, dimension 1)")
    d = fam.as_digit_spec(spec)
    return d.maps, d.base


def spec_dimension(spec, precision: int = 6) -> Dimension:
    return hausdorff_dimension(*similarity_data(spec), precision=precision)


@dataclass(frozen=True)
class GapStatistics:
    stage: Optional[int]
    count: int
    min_gap: Optional[Fraction]
    max_gap: Optional[Fraction]
    total_gap: Fraction
    histogram: tuple[tuple[Fraction, int], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "count": self.count,
            "min_gap": None if self.min_gap is None else fmt(self.min_gap),
            "max_gap": None if self.max_gap is None else fmt(self.max_gap),
            "total_gap": fmt(self.total_gap),
            "histogram": [[fmt(length), mult] for length, mult in self.histogram],
        }


def gap_statistics(s: IntervalSet, hull=(0, 1), stage: Optional[int] = None) -> GapStatistics:
    lengths = [g.length for g in gaps_within(s, hull)]
    hist = tuple(sorted(Counter(lengths).items(), reverse=True))
    return GapStatistics(
        stage=stage,
        count=len(lengths),
        min_gap=min(lengths) if lengths else None,
        max_gap=max(lengths) if lengths else None,
        total_gap=sum(lengths, Fraction(0)),
        histogram=hist,
    )


def thickness_proxy(s: IntervalSet, hull=(0, 1)) -> Fraction:
    """Smallest bridge-to-gap ratio over the bounded gaps of a stage set.

    For a gap G the bridge on each side runs from G's edge to the nearest gap
    at least as long as G, or to the end of the set. This is a finite-stage
    proxy only, not a limit thickness.
    """
    gaps_within(s, hull)  # containment check
    if len(s) < 2:
        raise DomainError("thickness proxy needs at least two components")
    ivs = s.intervals
    gaps = [(a.hi, b.lo) for a, b in zip(ivs, ivs[1:])]
    lengths = [hi - lo for lo, hi in gaps]
    left_stop = _nearest_at_least(lengths, [hi for _, hi in gaps], ivs[0].lo)
    right_stop = _nearest_at_least(lengths[::-1], [lo for lo, _ in gaps[::-1]], ivs[-1].hi)[::-1]
    best = None
    for (lo, hi), g, ls, rs in zip(gaps, lengths, left_stop, right_stop):
        ratio = min(lo - ls, rs - hi) / g
        if best is None or ratio < best:
            best = ratio
    return best


def _nearest_at_least(lengths, edges, default):
    """For each position, the edge of the nearest earlier entry with length >= its own."""
    stack: list[int] = []
    out = []
    for i, g in enumerate(lengths):
        while stack and lengths[stack[-1]] < g:
            stack.pop()
        out.append(edges[stack[-1]] if stack else default)
        stack.append(i)
    return out


def translate_intersection(a_spec, b_spec, t, n: int) -> tuple[IntervalSet, Fraction]:
    """Stage-``n`` set of ``a`` intersected with the stage-``n`` set of ``b`` shifted by ``t``."""
    inter = intersect(fam.stage_set(a_spec, n), translate(fam.stage_set(b_spec, n), t))
    return inter, total_length(inter)


def translation_sweep(a_spec, b_spec, ts: Iterable, n: int) -> list[tuple[Fraction, Fraction, int]]:
    a = fam.stage_set(a_spec, n)
    b = fam.stage_set(b_spec, n)
    rows = []
    for t in ts:
        inter = intersect(a, translate(b, t))
        rows.append((Fraction(t), total_length(inter), len(inter)))
    return rows


SWEEP_CSV_HEADER = ("t_num", "t_den", "intersection_length_num",
                    "intersection_length_den", "component_count")


def sweep_to_csv(rows, header: bool = True) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    if header:
        wr.writerow(SWEEP_CSV_HEADER)
    for t, length, count in rows:
        wr.writerow((t.numerator, t.denominator, length.numerator, length.denominator, count))
    return buf.getvalue()
