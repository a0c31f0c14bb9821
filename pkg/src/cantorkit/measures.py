"""Self-similar measures on the families and their staircase distribution functions.

Mass is propagated multiplicatively down the construction tree. For digit
systems (and the thin families through their digit presentation) the children
of a cylinder are its images under the alphabet maps, weighted in alphabet
order. For ``Gamma3`` the tree is the endpoint recursion itself: each stage
interval has a left and a right child, weighted by a 2-vector.

The distribution function is reported as an exact bracket
``lower <= F(x) <= upper`` that collapses wherever ``x`` is not strictly
inside a retained stage-``n`` interval.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import families as fam
from .rational import fmt, parse


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if not ws:
            raise fam.SpecError("empty weight vector")
        if any(w <= 0 for w in ws):
            raise fam.SpecError(f"weights must be positive: {[fmt(w) for w in ws]}")
        if sum(ws) != 1:
            raise fam.SpecError(f"weights sum to {fmt(sum(ws))}, not 1")

    @classmethod
    def uniform(cls, k: int) -> "WeightVector":
        return cls((Fraction(1, k),) * k)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        return cls(tuple(parse(t) for t in text.split(",")))

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def max(self) -> Fraction:
        return max(self.weights)


@dataclass(frozen=True)
class CdfBound:
    lower: Fraction
    upper: Fraction
    stage: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def map_count(spec) -> int:
    if isinstance(spec, fam.Gamma3):
        return 2
    return fam.as_digit_spec(spec).maps


def _check_weights(spec, w: WeightVector) -> None:
    if len(w) != map_count(spec):
        raise fam.SpecError(f"{spec} has {map_count(spec)} maps but {len(w)} weights were given")


def default_weights(spec) -> WeightVector:
    return WeightVector.uniform(map_count(spec))


def cylinder_mass(w: WeightVector, addr: Sequence[int], spec=None) -> Fraction:
    """Product of the weights along ``addr``.

    Digits are looked up in the spec's alphabet; without a spec (or for
    ``Gamma3``, whose children are 0 = left, 1 = right) they are positions.
    """
    if spec is not None and not isinstance(spec, fam.Gamma3):
        digit_spec = fam.as_digit_spec(spec)
        _check_weights(digit_spec, w)
        idx = [digit_spec.index(d) for d in addr]
    else:
        if spec is not None:
            _check_weights(spec, w)
        idx = list(addr)
        if any(not 0 <= i < len(w) for i in idx):
            raise fam.AddressError(f"address {tuple(addr)} out of range for {len(w)} weights")
    mass = Fraction(1)
    for i in idx:
        mass *= w[i]
    return mass


def _children(spec, lo: Fraction, hi: Fraction, stage: int):
    """Sub-intervals of a stage-(stage-1) cylinder at the next stage, in order."""
    if isinstance(spec, fam.Gamma3):
        length = fam.gamma3_interval_length(spec.p, spec.q, stage)
        return [(lo, lo + length), (hi - length, hi)]
    width = (hi - lo) / spec.base
    return [(lo + a * width, lo + (a + 1) * width) for a in spec.alphabet]


def cdf_bounds(spec, w: WeightVector, x, n: int) -> CdfBound:
    """Bracket the distribution function ``F(x) = mu([0, x])`` at stage ``n``.

    Cylinders ending at or left of ``x`` count fully toward ``lower``; a
    cylinder with ``x`` strictly inside widens ``upper`` by its mass. The
    measure has no atoms, so cylinders starting at ``x`` contribute nothing.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if not isinstance(spec, fam.Gamma3):
        spec = fam.as_digit_spec(spec)
    _check_weights(spec, w)
    if x == 0:
        return CdfBound(Fraction(0), Fraction(0), n)
    if x == 1:
        return CdfBound(Fraction(1), Fraction(1), n)
    lower, scale = Fraction(0), Fraction(1)
    lo, hi = Fraction(0), Fraction(1)
    for m in range(1, n + 1):
        inside = None
        for i, (clo, chi) in enumerate(_children(spec, lo, hi, m)):
            if chi <= x:
                lower += scale * w[i]
            elif clo < x:
                inside = (i, clo, chi)
        if inside is None:
            return CdfBound(lower, lower, n)
        i, lo, hi = inside
        scale *= w[i]
    return CdfBound(lower, lower + scale, n)


def staircase_samples(spec, w: WeightVector, m: int, n: int) -> list[tuple[Fraction, CdfBound]]:
    """``cdf_bounds`` at the ``m`` equally spaced abscissae ``i/(m-1)``."""
    if m < 2:
        raise ValueError("need at least two samples")
    return [(Fraction(i, m - 1), cdf_bounds(spec, w, Fraction(i, m - 1), n)) for i in range(m)]


def gamma3_measure_profile(p: int, q: int, n_max: int) -> list[tuple[int, Fraction]]:
    """Stage measures ``1 - sum_{m<=n} 2^(m-1) alpha^m`` for n = 0..n_max."""
    a = fam.Gamma3(p, q).alpha
    out, measure = [(0, Fraction(1))], Fraction(1)
    for n in range(1, n_max + 1):
        measure -= 2 ** (n - 1) * a ** n
        out.append((n, measure))
    return out


CSV_HEADER = ("x_num", "x_den", "lower_num", "lower_den", "upper_num", "upper_den", "stage")


def samples_to_csv(rows: Iterable[tuple[Fraction, CdfBound]], header: bool = True) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    if header:
        wr.writerow(CSV_HEADER)
    for x, b in rows:
        wr.writerow((x.numerator, x.denominator, b.lower.numerator, b.lower.denominator,
                     b.upper.numerator, b.upper.denominator, b.stage))
    return buf.getvalue()


def samples_to_json_obj(rows: Iterable[tuple[Fraction, CdfBound]]) -> list[dict]:
    return [{"x": fmt(x), "lower": fmt(b.lower), "upper": fmt(b.upper), "stage": b.stage}
            for x, b in rows]


def samples_from_json(data) -> list[tuple[Fraction, CdfBound]]:
    if isinstance(data, str):
        data = json.loads(data)
    return [(parse(r["x"]), CdfBound(parse(r["lower"]), parse(r["upper"]), int(r["stage"])))
            for r in data]
