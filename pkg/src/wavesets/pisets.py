"""Exact arithmetic on rational multiples of pi and interval-union sets.

Every frequency-axis quantity in this package is a rational multiple of pi,
kept exact with arbitrary-precision rationals.  Sets are finite unions of
half-open intervals ``[a, b)`` in a unique canonical form (sorted, disjoint,
adjacent intervals merged), so two sets are equal modulo null sets iff their
canonical forms compare equal.  Singletons are unrepresentable by design and
all operations are pure functions on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction]

_TWO = Fraction(2)


@dataclass(frozen=True, order=True)
class PiRational:
    """The scalar (num/den)*pi, stored as an exact Fraction coefficient."""

    coeff: Fraction

    def __init__(self, num: Union[int, Fraction, "PiRational"], den: int = 1):
        if isinstance(num, PiRational):
            coeff = num.coeff
        else:
            coeff = Fraction(num, den) if den != 1 else Fraction(num)
        object.__setattr__(self, "coeff", coeff)

    @property
    def num(self) -> int:
        return self.coeff.numerator

    @property
    def den(self) -> int:
        return self.coeff.denominator

    def __add__(self, other: "PiRational") -> "PiRational":
        return PiRational(self.coeff + other.coeff)

    def __sub__(self, other: "PiRational") -> "PiRational":
        return PiRational(self.coeff - other.coeff)

    def __neg__(self) -> "PiRational":
        return PiRational(-self.coeff)

    def __mul__(self, factor: RationalLike) -> "PiRational":
        return PiRational(self.coeff * factor)

    __rmul__ = __mul__

    def __truediv__(self, factor: RationalLike) -> "PiRational":
        return PiRational(self.coeff / factor)

    def times_pow2(self, n: int) -> "PiRational":
        """Multiply by 2**n (n may be negative); exact at any depth."""
        return PiRational(self.coeff * _TWO**n)

    def plus_turns(self, k: RationalLike) -> "PiRational":
        """Add 2*pi*k."""
        return PiRational(self.coeff + 2 * Fraction(k))

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __float__(self) -> float:
        return float(self.coeff) * math.pi

    def __str__(self) -> str:
        return f"{self.coeff}*pi"

    def to_json(self) -> dict:
        return {"num": self.num, "den": self.den}

    @staticmethod
    def from_json(obj: dict) -> "PiRational":
        return PiRational(int(obj["num"]), int(obj["den"]))


ZERO = PiRational(0)


def pi_mult(num: RationalLike, den: int = 1) -> PiRational:
    """Shorthand constructor: pi_mult(3, 2) == (3/2)*pi."""
    return PiRational(Fraction(num, den))


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval [a, b) with a < b; empty intervals are not values."""

    a: PiRational
    b: PiRational

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"empty or reversed interval [{self.a}, {self.b})")

    def length(self) -> PiRational:
        return self.b - self.a

    def contains(self, s: PiRational) -> bool:
        return self.a <= s < self.b

    def __str__(self) -> str:
        return f"[{self.a}, {self.b})"

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    @staticmethod
    def from_json(obj: dict) -> "Interval":
        return Interval(PiRational.from_json(obj["a"]), PiRational.from_json(obj["b"]))


def interval(a: RationalLike, b: RationalLike) -> Interval:
    """Interval with endpoints given as coefficients of pi."""
    return Interval(PiRational(Fraction(a)), PiRational(Fraction(b)))


@dataclass(frozen=True)
class PiSet:
    """Canonical finite union of half-open intervals with PiRational endpoints."""

    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        prev = None
        for iv in self.intervals:
            if prev is not None and not prev < iv.a:
                raise ValueError("PiSet intervals must be sorted, disjoint, non-adjacent")
            prev = iv.b

    def is_empty(self) -> bool:
        return not self.intervals

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __str__(self) -> str:
        return "{" + ", ".join(str(iv) for iv in self.intervals) + "}"

    def locate(self, s: PiRational) -> Interval | None:
        """The interval containing s, or None."""
        for iv in self.intervals:
            if iv.contains(s):
                return iv
            if s < iv.a:
                return None
        return None

    def contains_point(self, s: PiRational) -> bool:
        return self.locate(s) is not None

    def to_json(self) -> dict:
        return {"unit": "pi", "intervals": [iv.to_json() for iv in self.intervals]}

    @staticmethod
    def from_json(obj: dict) -> "PiSet":
        if obj.get("unit", "pi") != "pi":
            raise ValueError("PiSet JSON must declare unit 'pi'")
        raw = [Interval.from_json(o) for o in obj["intervals"]]
        return normalize(raw)


EMPTY = PiSet()


def piset(*pairs: tuple[RationalLike, RationalLike]) -> PiSet:
    """Build a canonical PiSet from (a, b) coefficient pairs."""
    return normalize([interval(a, b) for a, b in pairs])


def normalize(raw: Iterable[Interval | tuple[PiRational, PiRational]]) -> PiSet:
    """Canonicalize an arbitrary interval list: sort, merge overlaps and
    adjacencies.  Rejects any interval with a >= b.  Idempotent."""
    items: list[Interval] = []
    for entry in raw:
        iv = entry if isinstance(entry, Interval) else Interval(*entry)
        items.append(iv)
    items.sort(key=lambda iv: (iv.a, iv.b))
    merged: list[Interval] = []
    for iv in items:
        if merged and not merged[-1].b < iv.a:
            last = merged[-1]
            if iv.b > last.b:
                merged[-1] = Interval(last.a, iv.b)
        else:
            merged.append(iv)
    return PiSet(tuple(merged))


def measure(E: PiSet) -> PiRational:
    """Total length, exact."""
    total = Fraction(0)
    for iv in E.intervals:
        total += iv.length().coeff
    return PiRational(total)


def scale(E: PiSet, factor: RationalLike) -> PiSet:
    """{factor*s : s in E} for a positive rational factor."""
    f = Fraction(factor)
    if f <= 0:
        raise ValueError("scale factor must be positive")
    return PiSet(tuple(Interval(iv.a * f, iv.b * f) for iv in E.intervals))


def dilate(E: PiSet, n: int) -> PiSet:
    """{2**n * s : s in E}."""
    return scale(E, _TWO**n)


def shift(E: PiSet, t: PiRational) -> PiSet:
    """{s + t : s in E}; preserves canonical form."""
    return PiSet(tuple(Interval(iv.a + t, iv.b + t) for iv in E.intervals))


def translate(E: PiSet, k: RationalLike) -> PiSet:
    """{s + 2*pi*k : s in E}."""
    return shift(E, PiRational(2 * Fraction(k)))


def _combine(E: PiSet, F: PiSet, keep) -> PiSet:
    """Sweep the merged endpoint grid; keep(elementary in E, in F) decides
    membership of each elementary segment.  Exact and canonical."""
    points = sorted(
        {iv.a for iv in E.intervals}
        | {iv.b for iv in E.intervals}
        | {iv.a for iv in F.intervals}
        | {iv.b for iv in F.intervals}
    )
    out: list[Interval] = []
    for lo, hi in zip(points, points[1:]):
        if keep(E.contains_point(lo), F.contains_point(lo)):
            out.append(Interval(lo, hi))
    return normalize(out)


def union(E: PiSet, F: PiSet) -> PiSet:
    return normalize(list(E.intervals) + list(F.intervals))


def intersect(E: PiSet, F: PiSet) -> PiSet:
    return _combine(E, F, lambda a, b: a and b)


def subtract(E: PiSet, F: PiSet) -> PiSet:
    return _combine(E, F, lambda a, b: a and not b)


def symmetric_difference(E: PiSet, F: PiSet) -> PiSet:
    return _combine(E, F, lambda a, b: a != b)


def is_subset(E: PiSet, F: PiSet) -> bool:
    """E subseteq F, exactly."""
    return subtract(E, F).is_empty()


def union_all(sets: Sequence[PiSet]) -> PiSet:
    out: list[Interval] = []
    for s in sets:
        out.extend(s.intervals)
    return normalize(out)


# -- exact integer-rounding and exponent-range helpers ------------------------


def ceil_strict(x: Fraction) -> int:
    """Smallest integer strictly greater than x."""
    return x.numerator // x.denominator + 1


def floor_strict(x: Fraction) -> int:
    """Largest integer strictly less than x."""
    return -((-x.numerator) // x.denominator) - 1


def least_exponent_gt(d: Fraction, x: Fraction, bound: Fraction) -> int:
    """Smallest integer n with d**n * x > bound (d > 1, x > 0, bound > 0)."""
    n, v = 0, x
    while v > bound:
        v /= d
        n -= 1
    while v <= bound:
        v *= d
        n += 1
    return n


def greatest_exponent_lt(d: Fraction, x: Fraction, bound: Fraction) -> int:
    """Largest integer n with d**n * x < bound."""
    n, v = 0, x
    while v < bound:
        v *= d
        n += 1
    while v >= bound:
        v /= d
        n -= 1
    return n


def scaled_overlaps(R: Interval, I: Interval, d: Fraction = _TWO):
    """Yield (n, sub) with sub = (d**n * R) ∩ I nonempty.

    R and I must have a definite sign (dilation preserves sign); intervals
    touching or straddling 0 are rejected.
    """
    r1, r2 = R.a.coeff, R.b.coeff
    i1, i2 = I.a.coeff, I.b.coeff
    zero = Fraction(0)
    if r1 <= zero <= r2 or i1 <= zero <= i2:
        raise ValueError("scaled_overlaps requires intervals away from 0")
    if (r1 > 0) != (i1 > 0):
        return
    if r1 > 0:
        n_min = least_exponent_gt(d, r2, i1)
        n_max = greatest_exponent_lt(d, r1, i2)
    else:
        n_min = least_exponent_gt(d, -r1, -i2)
        n_max = greatest_exponent_lt(d, -r2, -i1)
    for n in range(n_min, n_max + 1):
        f = d**n
        lo = max(r1 * f, i1)
        hi = min(r2 * f, i2)
        if lo < hi:
            yield n, Interval(PiRational(lo), PiRational(hi))
