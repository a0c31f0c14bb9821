"""Closed-interval set algebra over exact rational endpoints.

An :class:`IntervalSet` is a finite union of closed intervals kept in a
canonical form (sorted, pairwise disjoint, touching members merged), so two
sets are equal exactly when their tuples of intervals are equal. Removed
material is described by a :class:`GapList` of open intervals.
"""

from __future__ import annotations

import bisect
import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .rational import fmt, parse


class ContainmentError(ValueError):
    """A set is not contained in the hull it is measured against."""


@dataclass(frozen=True, order=True)
class ClosedInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty closed interval [{fmt(lo)}, {fmt(hi)}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{fmt(self.lo)},{fmt(self.hi)}]"


@dataclass(frozen=True, order=True)
class OpenInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if not lo < hi:
            raise ValueError(f"empty open interval ({fmt(lo)}, {fmt(hi)})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    def __str__(self) -> str:
        return f"({fmt(self.lo)},{fmt(self.hi)})"


def _as_interval(item) -> ClosedInterval:
    if isinstance(item, ClosedInterval):
        return item
    lo, hi = item
    return ClosedInterval(lo, hi)


class IntervalSet:
    """Immutable canonical union of closed intervals.

    Construct from any iterable of :class:`ClosedInterval` or ``(lo, hi)``
    pairs; the input is sorted and merged.
    """

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable = ()):
        self._intervals = _merge(sorted(_as_interval(i) for i in intervals))

    @classmethod
    def _from_canonical(cls, intervals: Sequence[ClosedInterval]) -> "IntervalSet":
        obj = cls.__new__(cls)
        obj._intervals = tuple(intervals)
        return obj

    @property
    def intervals(self) -> tuple[ClosedInterval, ...]:
        return self._intervals

    def __iter__(self) -> Iterator[ClosedInterval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __getitem__(self, i):
        return self._intervals[i]

    def __bool__(self) -> bool:
        return bool(self._intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        return "IntervalSet({" + ",".join(str(i) for i in self._intervals) + "})"

    def __contains__(self, x) -> bool:
        return contains_point(self, x)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return intersect(self, other)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return union(self, other)

    @property
    def length(self) -> Fraction:
        return total_length(self)

    def hull(self) -> ClosedInterval | None:
        if not self._intervals:
            return None
        return ClosedInterval(self._intervals[0].lo, self._intervals[-1].hi)


class GapList:
    """Sorted, pairwise-disjoint open intervals."""

    __slots__ = ("_gaps",)

    def __init__(self, gaps: Iterable = ()):
        items = sorted(g if isinstance(g, OpenInterval) else OpenInterval(*g) for g in gaps)
        for prev, nxt in zip(items, items[1:]):
            if prev.hi > nxt.lo:
                raise ValueError(f"overlapping gaps {prev} and {nxt}")
        self._gaps = tuple(items)

    @property
    def gaps(self) -> tuple[OpenInterval, ...]:
        return self._gaps

    def __iter__(self) -> Iterator[OpenInterval]:
        return iter(self._gaps)

    def __len__(self) -> int:
        return len(self._gaps)

    def __getitem__(self, i):
        return self._gaps[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GapList):
            return NotImplemented
        return self._gaps == other._gaps

    def __hash__(self) -> int:
        return hash(self._gaps)

    def __repr__(self) -> str:
        return "GapList({" + ",".join(str(g) for g in self._gaps) + "})"

    @property
    def total_length(self) -> Fraction:
        return sum((g.length for g in self._gaps), Fraction(0))


def _merge(items: Sequence[ClosedInterval]) -> tuple[ClosedInterval, ...]:
    # items must be sorted by lo
    out: list[ClosedInterval] = []
    for iv in items:
        if out and iv.lo <= out[-1].hi:
            if iv.hi > out[-1].hi:
                out[-1] = ClosedInterval(out[-1].lo, iv.hi)
        else:
            out.append(iv)
    return tuple(out)


def normalize(raw: Iterable) -> IntervalSet:
    return IntervalSet(raw)


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return IntervalSet(a.intervals + b.intervals)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out = []
    i = j = 0
    A, B = a.intervals, b.intervals
    while i < len(A) and j < len(B):
        lo = max(A[i].lo, B[j].lo)
        hi = min(A[i].hi, B[j].hi)
        if lo <= hi:
            out.append(ClosedInterval(lo, hi))
        if A[i].hi < B[j].hi:
            i += 1
        else:
            j += 1
    # pieces of canonical inputs are already disjoint and sorted
    return IntervalSet._from_canonical(_merge(out))


def subtract_gaps(base: IntervalSet, g: GapList | Iterable) -> IntervalSet:
    """Remove open gaps from a closed set; gap endpoints survive."""
    gaps = g.gaps if isinstance(g, GapList) else tuple(sorted(
        x if isinstance(x, OpenInterval) else OpenInterval(*x) for x in g))
    his = [x.hi for x in gaps]
    out = []
    for iv in base:
        cur = iv.lo
        k = bisect.bisect_right(his, iv.lo)
        while k < len(gaps) and gaps[k].lo < iv.hi:
            gap = gaps[k]
            if gap.lo >= cur:
                out.append(ClosedInterval(cur, gap.lo))
            cur = max(cur, gap.hi)
            k += 1
        if cur <= iv.hi:
            out.append(ClosedInterval(cur, iv.hi))
    return IntervalSet(out)


def total_length(s: IntervalSet) -> Fraction:
    return sum((iv.length for iv in s), Fraction(0))


def gaps_within(s: IntervalSet, hull: ClosedInterval | tuple) -> GapList:
    """Open complement of ``s`` inside ``hull``."""
    hull = _as_interval(hull)
    if s and (s[0].lo < hull.lo or s[-1].hi > hull.hi):
        raise ContainmentError(f"{s!r} is not contained in {hull}")
    out = []
    cur = hull.lo
    for iv in s:
        if iv.lo > cur:
            out.append(OpenInterval(cur, iv.lo))
        cur = iv.hi
    if cur < hull.hi:
        out.append(OpenInterval(cur, hull.hi))
    return GapList(out)


def translate(s: IntervalSet, t) -> IntervalSet:
    t = Fraction(t)
    return IntervalSet._from_canonical(
        [ClosedInterval(iv.lo + t, iv.hi + t) for iv in s])


def reflect(s: IntervalSet, center=Fraction(1, 2)) -> IntervalSet:
    """Mirror image under x -> 2*center - x (x -> 1 - x by default)."""
    c2 = 2 * Fraction(center)
    return IntervalSet._from_canonical(
        [ClosedInterval(c2 - iv.hi, c2 - iv.lo) for iv in reversed(s.intervals)])


def contains_point(s: IntervalSet, x) -> bool:
    ivs = s.intervals
    k = bisect.bisect_right(ivs, x, key=lambda iv: iv.lo) - 1
    return k >= 0 and x <= ivs[k].hi


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Closure of the set difference ``a - b``.

    Empty exactly when ``a`` is a subset of ``b``. Every component with
    positive length has its interior outside ``b``; a point component is a
    point of ``a`` lying outside ``b``.
    """
    B = b.intervals
    los = [x.lo for x in B]
    out = []
    for iv in a:
        # gap j of b is the open interval (B[j-1].hi, B[j].lo), unbounded at the ends
        j = bisect.bisect_right(los, iv.lo)
        while j <= len(B):
            glo = B[j - 1].hi if j > 0 else None
            ghi = B[j].lo if j < len(B) else None
            if glo is not None and glo >= iv.hi:
                break
            lo = iv.lo if glo is None else max(iv.lo, glo)
            hi = iv.hi if ghi is None else min(iv.hi, ghi)
            if lo < hi:
                out.append(ClosedInterval(lo, hi))
            elif iv.lo == iv.hi:
                out.append(iv)
            j += 1
    return IntervalSet(out)


# -- serialization ---------------------------------------------------------

def to_json_obj(s: IntervalSet | GapList) -> list[list[str]]:
    items = s.intervals if isinstance(s, IntervalSet) else s.gaps
    return [[fmt(i.lo), fmt(i.hi)] for i in items]


def to_json(s: IntervalSet | GapList) -> str:
    return json.dumps(to_json_obj(s))


def from_json(data) -> IntervalSet:
    if isinstance(data, str):
        data = json.loads(data)
    return IntervalSet((parse(lo), parse(hi)) for lo, hi in data)


def gaps_from_json(data) -> GapList:
    if isinstance(data, str):
        data = json.loads(data)
    return GapList((parse(lo), parse(hi)) for lo, hi in data)


CSV_HEADER = ("lo_num", "lo_den", "hi_num", "hi_den")


def to_csv(s: IntervalSet | GapList, header: bool = True) -> str:
    items = s.intervals if isinstance(s, IntervalSet) else s.gaps
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_HEADER)
    for i in items:
        w.writerow((i.lo.numerator, i.lo.denominator, i.hi.numerator, i.hi.denominator))
    return buf.getvalue()


def from_csv(text: str) -> IntervalSet:
    rows = list(csv.reader(io.StringIO(text)))
    if rows and tuple(rows[0]) == CSV_HEADER:
        rows = rows[1:]
    return IntervalSet((Fraction(int(a), int(b)), Fraction(int(c), int(d)))
                       for a, b, c, d in rows)
