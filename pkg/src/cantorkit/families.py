"""Constructors for the deterministic Cantor families on [0, 1].

Three named families plus generic digit systems:

* ``Gamma1(q)``: base-``q`` digits restricted to the even values (``q`` odd).
* ``Gamma2(q)``: base-``q`` digits restricted to ``{0, q-1}``.
* ``Gamma3(p, q)``: the middle-alpha construction with ``alpha = p/q <= 1/3``,
  removing a centred gap of length ``alpha**n`` from every component at stage n.
* ``DigitIFS(base, alphabet)``: the maps ``x -> (x + a)/base`` for ``a`` in the
  alphabet.

Each family is built by more than one route (gap formulas, endpoint recursion,
direct nested deletion, digit composition) so :mod:`cantorkit.oracle` can
compare them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .intervals import ClosedInterval, GapList, IntervalSet, OpenInterval, subtract_gaps

UNIT = IntervalSet([(0, 1)])


class SpecError(ValueError):
    """Family parameters violate the family's constraints."""


class AddressError(ValueError):
    """An address uses a digit outside the alphabet."""


class ConstructionError(ArithmeticError):
    """A nested deletion would remove at least a whole component."""


@dataclass(frozen=True)
class Gamma1:
    q: int

    def __post_init__(self):
        if self.q < 3 or self.q % 2 == 0:
            raise SpecError(f"gamma1 needs odd q >= 3, got q={self.q}")

    def __str__(self):
        return f"gamma1:q={self.q}"


@dataclass(frozen=True)
class Gamma2:
    q: int

    def __post_init__(self):
        if self.q < 3:
            raise SpecError(f"gamma2 needs q >= 3, got q={self.q}")

    def __str__(self):
        return f"gamma2:q={self.q}"


@dataclass(frozen=True)
class Gamma3:
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0:
            raise SpecError(f"gamma3 needs positive p and q, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise SpecError(f"gamma3 needs gcd(p, q) = 1, got p={self.p}, q={self.q}")
        if 3 * self.p > self.q:
            raise SpecError(f"gamma3 needs p/q <= 1/3, got {self.p}/{self.q}")

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"gamma3:p={self.p},q={self.q}"


@dataclass(frozen=True)
class DigitIFS:
    base: int
    alphabet: tuple[int, ...]

    def __post_init__(self):
        alphabet = tuple(int(a) for a in self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if self.base < 2:
            raise SpecError(f"digit base must be >= 2, got {self.base}")
        if len(alphabet) < 2:
            raise SpecError("digit alphabet needs at least two digits")
        if any(b <= a for a, b in zip(alphabet, alphabet[1:])):
            raise SpecError(f"digit alphabet must be strictly increasing: {alphabet}")
        if alphabet[0] < 0 or alphabet[-1] >= self.base:
            raise SpecError(f"digits must lie in [0, {self.base - 1}]: {alphabet}")

    @property
    def maps(self) -> int:
        return len(self.alphabet)

    def index(self, digit: int) -> int:
        try:
            return self.alphabet.index(digit)
        except ValueError:
            raise AddressError(f"digit {digit} not in alphabet {self.alphabet}") from None

    def __str__(self):
        return f"digit:base={self.base},A=" + ",".join(map(str, self.alphabet))


FamilySpec = Union[Gamma1, Gamma2, Gamma3, DigitIFS]


def parse_spec(text: str) -> FamilySpec:
    """Parse ``gamma1:q=5``, ``gamma2:q=4``, ``gamma3:p=1,q=4`` or
    ``digit:base=6,A=0,1,4,5``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise SpecError(f"malformed family spec {text!r}")
    fields: dict[str, list[str]] = {}
    key = None
    for tok in rest.split(","):
        tok = tok.strip()
        if "=" in tok:
            key, _, val = tok.partition("=")
            key = key.strip()
            fields[key] = [val.strip()]
        elif key is not None and tok:
            fields[key].append(tok)
        else:
            raise SpecError(f"malformed family spec {text!r}")
    try:
        ints = {k: [int(v) for v in vs] for k, vs in fields.items()}
        kind = kind.strip().lower()
        if kind == "gamma1" and set(ints) == {"q"}:
            return Gamma1(*ints["q"])
        if kind == "gamma2" and set(ints) == {"q"}:
            return Gamma2(*ints["q"])
        if kind == "gamma3" and set(ints) == {"p", "q"}:
            return Gamma3(ints["p"][0], ints["q"][0])
        if kind == "digit" and set(ints) == {"base", "A"}:
            return DigitIFS(ints["base"][0], tuple(ints["A"]))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"malformed family spec {text!r}: {exc}") from None
    raise SpecError(f"malformed family spec {text!r}")


def _check_stage(n: int, minimum: int = 0) -> None:
    if n < minimum:
        raise SpecError(f"stage must be >= {minimum}, got {n}")


# -- thin families from their gap formulas ----------------------------------

def gamma1_gaps(q: int, n: int) -> GapList:
    """The level-``n`` gaps of the odd-digit family: for every prefix ``k`` and
    odd digit ``2r-1`` the slot ``((qk + 2r - 1)/q^n, (qk + 2r)/q^n)``."""
    Gamma1(q)
    _check_stage(n, 1)
    den = q ** n
    return GapList(
        OpenInterval(Fraction(q * k + 2 * r - 1, den), Fraction(q * k + 2 * r, den))
        for k in range(q ** (n - 1))
        for r in range(1, (q - 1) // 2 + 1)
    )


def gamma1_stage(q: int, n: int) -> IntervalSet:
    Gamma1(q)
    _check_stage(n)
    s = UNIT
    for m in range(1, n + 1):
        s = subtract_gaps(s, gamma1_gaps(q, m))
    return s


def gamma2_gaps(q: int, n: int, conjectured_correction: bool = False) -> GapList:
    """Level-``n`` gaps ``((qk + 1)/q^n, (qk + 2)/q^n)`` as printed.

    With ``conjectured_correction=True`` the gap instead runs to
    ``(qk + q - 1)/q^n``, removing every digit strictly between 0 and q-1.
    That variant is not the printed formula; the two agree only at q = 3.
    """
    Gamma2(q)
    _check_stage(n, 1)
    den = q ** n
    right = q - 1 if conjectured_correction else 2
    return GapList(
        OpenInterval(Fraction(q * k + 1, den), Fraction(q * k + right, den))
        for k in range(q ** (n - 1))
    )


def gamma2_stage(q: int, n: int, conjectured_correction: bool = False) -> IntervalSet:
    Gamma2(q)
    _check_stage(n)
    s = UNIT
    for m in range(1, n + 1):
        s = subtract_gaps(s, gamma2_gaps(q, m, conjectured_correction))
    return s


# -- the middle-alpha family ------------------------------------------------

def gamma3_interval_length(p: int, q: int, n: int) -> Fraction:
    """Common length of every stage-``n`` interval,
    ``((2a)^(n+1) + 2(1 - 3a)) / (2^(n+1) (1 - 2a))``."""
    a = Gamma3(p, q).alpha
    _check_stage(n)
    return ((2 * a) ** (n + 1) + 2 * (1 - 3 * a)) / (2 ** (n + 1) * (1 - 2 * a))


def gamma3_delta(p: int, q: int, n: int) -> Fraction:
    """Offset between a parent endpoint and the inner child endpoint at stage n:
    interval length plus gap length, ``((1 - 3a) + (1 - a)(2a)^n) / ((1 - 2a) 2^n)``."""
    a = Gamma3(p, q).alpha
    _check_stage(n, 1)
    return ((1 - 3 * a) + (1 - a) * (2 * a) ** n) / ((1 - 2 * a) * 2 ** n)


@lru_cache(maxsize=1 << 16)
def _a(p: int, q: int, n: int, k: int) -> Fraction:
    if n == 0:
        return Fraction(0)
    if k % 2:
        return _a(p, q, n - 1, (k + 1) // 2)
    return _a(p, q, n - 1, k // 2) + gamma3_delta(p, q, n)


@lru_cache(maxsize=1 << 16)
def _b(p: int, q: int, n: int, k: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    if k % 2:
        return _b(p, q, n - 1, (k + 1) // 2) - gamma3_delta(p, q, n)
    return _b(p, q, n - 1, k // 2)


def _check_k(n: int, k: int) -> None:
    if n == 0 and k != 1:
        raise IndexError("for n = 0 only k = 1 exists")
    if not 1 <= k <= 2 ** n:
        raise IndexError(f"k must satisfy 1 <= k <= 2^{n}, got {k}")


def gamma3_a(p: int, q: int, n: int, k: int) -> Fraction:
    """Lower endpoint of the ``k``-th stage-``n`` interval (1-based)."""
    Gamma3(p, q)
    _check_stage(n)
    _check_k(n, k)
    return _a(p, q, n, k)


def gamma3_b(p: int, q: int, n: int, k: int) -> Fraction:
    """Upper endpoint of the ``k``-th stage-``n`` interval (1-based)."""
    Gamma3(p, q)
    _check_stage(n)
    _check_k(n, k)
    return _b(p, q, n, k)


@dataclass(frozen=True)
class EndpointTable:
    p: int
    q: int
    stage: int
    rows: tuple[tuple[Fraction, Fraction], ...]

    def intervals(self) -> list[ClosedInterval]:
        return [ClosedInterval(a, b) for a, b in self.rows]

    def stage_set(self) -> IntervalSet:
        return IntervalSet(self.intervals())


def gamma3_endpoints(p: int, q: int, n: int) -> EndpointTable:
    """All ``2^n`` stage-``n`` intervals from the parent/child endpoint recursion:
    odd children keep the parent's left end, even children keep its right end,
    and the inner ends sit ``gamma3_delta`` away from the parent's ends."""
    Gamma3(p, q)
    _check_stage(n)
    rows = tuple((_a(p, q, n, k), _b(p, q, n, k)) for k in range(1, 2 ** n + 1))
    return EndpointTable(p, q, n, rows)


def gamma3_stage(p: int, q: int, n: int) -> IntervalSet:
    return gamma3_endpoints(p, q, n).stage_set()


def gamma3_measure(p: int, q: int) -> Fraction:
    """Lebesgue measure of the limit set, ``(1 - 3a)/(1 - 2a)``."""
    a = Gamma3(p, q).alpha
    return (1 - 3 * a) / (1 - 2 * a)


def nested_middle_alpha_stage(p: int, q: int, n: int) -> IntervalSet:
    """Direct deletion: at stage m cut the centred open interval of length
    ``alpha**m`` out of every component."""
    a = Gamma3(p, q).alpha
    _check_stage(n)
    comps = [ClosedInterval(0, 1)]
    for m in range(1, n + 1):
        cut = a ** m
        nxt = []
        for c in comps:
            if cut >= c.length:
                raise ConstructionError(
                    f"stage {m}: gap {cut} does not fit in component {c}")
            mid = (c.lo + c.hi) / 2
            nxt.append(ClosedInterval(c.lo, mid - cut / 2))
            nxt.append(ClosedInterval(mid + cut / 2, c.hi))
        comps = nxt
    return IntervalSet(comps)


# -- digit systems ----------------------------------------------------------

def gamma1_digit_spec(q: int) -> DigitIFS:
    Gamma1(q)
    return DigitIFS(q, tuple(range(0, q, 2)))


def gamma2_digit_spec(q: int) -> DigitIFS:
    Gamma2(q)
    return DigitIFS(q, (0, q - 1))


def gamma3_digit_spec(p: int, q: int) -> DigitIFS:
    """Base ``2q`` with digits ``0..q-p-1`` and ``q+p..2q-1``."""
    Gamma3(p, q)
    return DigitIFS(2 * q, tuple(range(0, q - p)) + tuple(range(q + p, 2 * q)))


def address_interval(spec: DigitIFS, addr: Sequence[int]) -> ClosedInterval:
    """Image of [0, 1] under ``T_{a_1} o ... o T_{a_n}``:
    ``[sum a_k base^-k, sum a_k base^-k + base^-n]``."""
    num = 0
    for d in addr:
        spec.index(d)
        num = num * spec.base + d
    den = spec.base ** len(addr)
    return ClosedInterval(Fraction(num, den), Fraction(num + 1, den))


def digit_map(s: IntervalSet, digit: int, base: int) -> IntervalSet:
    return IntervalSet._from_canonical(
        [ClosedInterval((iv.lo + digit) / base, (iv.hi + digit) / base) for iv in s])


def digit_stage(spec: DigitIFS, n: int) -> IntervalSet:
    """Stage-``n`` set ``I_n = U_a T_a(I_{n-1})`` with ``I_0 = [0, 1]``."""
    _check_stage(n)
    s = UNIT
    for _ in range(n):
        s = IntervalSet(iv for a in spec.alphabet for iv in digit_map(s, a, spec.base))
    return s


def digit_expansions(x, base: int, max_len: int) -> set[tuple[int, ...]]:
    """Every length-``max_len`` prefix of some base-``base`` expansion of ``x``.

    A rational has at most two expansions (a terminating one and its twin
    ending in repeated ``base - 1``), so the result has at most two members.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    frontier = {((), x)}
    for _ in range(max_len):
        nxt = set()
        for prefix, r in frontier:
            for d, rest in _digit_steps(r, base):
                nxt.add((prefix + (d,), rest))
        frontier = nxt
    return {prefix for prefix, _ in frontier}


def _digit_steps(r: Fraction, base: int, alphabet: Iterable[int] | None = None):
    """Digits ``d`` with ``d <= r*base <= d + 1`` and the remainders they leave."""
    y = r * base
    fl = math.floor(y)
    cands = {fl, fl - 1} if y == fl else {fl}
    allowed = set(range(base)) if alphabet is None else set(alphabet)
    for d in sorted(cands):
        if d in allowed:
            yield d, y - d


def stage_set(spec: FamilySpec, n: int) -> IntervalSet:
    """Canonical stage-``n`` set of a family via its primary construction."""
    if isinstance(spec, Gamma1):
        return gamma1_stage(spec.q, n)
    if isinstance(spec, Gamma2):
        return gamma2_stage(spec.q, n)
    if isinstance(spec, Gamma3):
        return gamma3_stage(spec.p, spec.q, n)
    if isinstance(spec, DigitIFS):
        return digit_stage(spec, n)
    raise TypeError(f"not a family spec: {spec!r}")


def as_digit_spec(spec: FamilySpec) -> DigitIFS:
    if isinstance(spec, DigitIFS):
        return spec
    if isinstance(spec, Gamma1):
        return gamma1_digit_spec(spec.q)
    if isinstance(spec, Gamma2):
        return gamma2_digit_spec(spec.q)
    raise SpecError(f"{spec} has no exact digit presentation here")
