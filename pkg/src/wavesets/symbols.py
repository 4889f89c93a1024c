"""Piecewise-constant complex functions on exact interval sets.

Two function types are shared across the interpolation and analysis layers:

* FrequencySymbol — a complex piecewise-constant function with support a
  PiSet; models Fourier transforms of candidate wavelets.  Zero-valued
  pieces are dropped, so the stored support is the essential support.
* DilationPeriodicFunction — a function stored on a fundamental domain for
  dyadic dilation and extended everywhere (except 0) by h(2s) = h(s); these
  parameterize the Fourier-side commutant multipliers.

Values are complex doubles; all interval bookkeeping is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import congruence
from .pisets import (
    Interval,
    PiRational,
    PiSet,
    ceil_strict,
    floor_strict,
    normalize,
    pi_mult,
    scaled_overlaps,
    union_all,
)

_TWO = Fraction(2)


def _canonical_pieces(
    pieces: Iterable[tuple[Interval, complex]], drop_zero: bool
) -> tuple[tuple[Interval, complex], ...]:
    items = [(iv, complex(v)) for iv, v in pieces if not (drop_zero and v == 0)]
    items.sort(key=lambda p: p[0].a)
    prev_b = None
    merged: list[tuple[Interval, complex]] = []
    for iv, v in items:
        if prev_b is not None and iv.a < prev_b:
            raise ValueError("pieces overlap")
        if merged and merged[-1][1] == v and merged[-1][0].b == iv.a:
            merged[-1] = (Interval(merged[-1][0].a, iv.b), v)
        else:
            merged.append((iv, v))
        prev_b = iv.b
    return tuple(merged)


@dataclass(frozen=True)
class FrequencySymbol:
    """Complex piecewise-constant function; pieces are its essential support."""

    pieces: tuple[tuple[Interval, complex], ...]

    def __init__(self, pieces: Iterable[tuple[Interval, complex]]):
        object.__setattr__(self, "pieces", _canonical_pieces(pieces, drop_zero=True))

    @property
    def support(self) -> PiSet:
        return normalize([iv for iv, _ in self.pieces])

    def value_at(self, s: PiRational) -> complex:
        for iv, v in self.pieces:
            if iv.contains(s):
                return v
        return 0j

    def to_json(self) -> dict:
        return {
            "pieces": [
                {"piece": iv.to_json(), "value": [v.real, v.imag]} for iv, v in self.pieces
            ]
        }

    @staticmethod
    def from_json(obj: dict) -> "FrequencySymbol":
        return FrequencySymbol(
            (Interval.from_json(p["piece"]), complex(p["value"][0], p["value"][1]))
            for p in obj["pieces"]
        )


def msf_symbol(E: PiSet) -> FrequencySymbol:
    """The s-elementary symbol (1/sqrt(2pi)) * indicator of E."""
    v = 1.0 / math.sqrt(2.0 * math.pi)
    return FrequencySymbol((iv, complex(v)) for iv in E.intervals)


def scale_symbol(sym: FrequencySymbol, z: complex) -> FrequencySymbol:
    return FrequencySymbol((iv, z * v) for iv, v in sym.pieces)


def add_symbols(symbols: Sequence[FrequencySymbol]) -> FrequencySymbol:
    """Pointwise sum, refined on the common breakpoint grid."""
    points = sorted(
        {p for sym in symbols for iv, _ in sym.pieces for p in (iv.a, iv.b)}
    )
    out = []
    for lo, hi in zip(points, points[1:]):
        total = 0j
        for sym in symbols:
            for iv, v in sym.pieces:
                if iv.a <= lo and hi <= iv.b:
                    total += v
        if total != 0:
            out.append((Interval(lo, hi), total))
    return FrequencySymbol(out)


@dataclass(frozen=True)
class DilationPeriodicFunction:
    """h with h(2s) = h(s), stored as a piecewise partition of a fundamental
    domain (any 2-dilation generator; the Littlewood-Paley set by default)."""

    domain: PiSet
    pieces: tuple[tuple[Interval, complex], ...]

    def __init__(self, domain: PiSet, pieces: Iterable[tuple[Interval, complex]]):
        canon = _canonical_pieces(pieces, drop_zero=False)
        if normalize([iv for iv, _ in canon]) != domain:
            raise ValueError("pieces must partition the fundamental domain")
        if not congruence.is_dilation_generator(domain):
            raise ValueError("fundamental domain must be a 2-dilation generator")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "pieces", canon)

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(v.imag) <= tol for _, v in self.pieces)

    def to_json(self) -> dict:
        return {
            "fundamental_domain": self.domain.to_json(),
            "pieces": [
                {"piece": iv.to_json(), "value": [v.real, v.imag]} for iv, v in self.pieces
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "DilationPeriodicFunction":
        return DilationPeriodicFunction(
            PiSet.from_json(obj["fundamental_domain"]),
            [
                (Interval.from_json(p["piece"]), complex(p["value"][0], p["value"][1]))
                for p in obj["pieces"]
            ],
        )


def dpf_constant(value: complex, domain: PiSet | None = None) -> DilationPeriodicFunction:
    domain = congruence.LITTLEWOOD_PALEY if domain is None else domain
    return DilationPeriodicFunction(domain, [(iv, value) for iv in domain.intervals])


def fold_point(s: PiRational, domain: PiSet) -> tuple[int, PiRational]:
    """The unique (n, 2**-n * s) with 2**-n * s in the fundamental domain.

    Raises ValueError when s = 0 or when no exponent lands in the domain
    (impossible for dilation generators; signals a bad domain otherwise).
    """
    c = s.coeff
    if c == 0:
        raise ValueError("0 is outside every dilation orbit")
    mags = [abs(iv.a.coeff) for iv in domain.intervals] + [
        abs(iv.b.coeff) for iv in domain.intervals
    ]
    lo = min(m for m in mags if m > 0)
    hi = max(mags)
    a = abs(c)
    n, v = 0, a
    while v > hi:
        v /= 2
        n += 1
    while v * 2 <= hi:
        v *= 2
        n -= 1
    # v = 2**-n |s| is the largest halving-chain element not above hi (the
    # bound is attainable: negative intervals are closed at their largest
    # magnitude); scan downward through the window
    while v >= lo:
        p = PiRational(v if c > 0 else -v)
        if domain.contains_point(p):
            return n, p
        v /= 2
        n += 1
    raise ValueError(f"{s} has no dilation fold into the domain")


def eval_dpf(h: DilationPeriodicFunction, s: PiRational) -> complex:
    """Evaluate the 2-dilation-periodic extension of h at s (s != 0)."""
    _, p = fold_point(s, h.domain)
    for iv, v in h.pieces:
        if iv.contains(p):
            return v
    raise AssertionError("fold landed outside the stored pieces")


def extend_onto(h: DilationPeriodicFunction, S: PiSet) -> list[tuple[Interval, complex]]:
    """Restriction to S of the dilation-periodic extension of h.

    S must stay away from 0.  The returned pieces partition S exactly.
    """
    out: list[tuple[Interval, complex]] = []
    covered = Fraction(0)
    for I in S.intervals:
        for R, v in h.pieces:
            for _, sub in scaled_overlaps(R, I):
                out.append((sub, v))
                covered += sub.length().coeff
    if covered != sum(iv.length().coeff for iv in S.intervals):
        raise AssertionError("dilation extension did not cover the target set")
    out.sort(key=lambda p: p[0].a)
    return out


def coset_power_profile(sym: FrequencySymbol) -> list[tuple[Interval, float]]:
    """Fold |sym|^2 over the 2*pi cosets: for each piece of [0, 2*pi) the sum
    of |value|^2 across all translates landing there.

    For the Fourier transform of any orthonormal wavelet this profile is
    identically 1/(2*pi); it is the exact constant-modulus statement that
    survives overlapping interpolated supports.
    """
    folded: list[tuple[Fraction, Fraction, complex]] = []
    for iv, v in sym.pieces:
        a, b = iv.a.coeff, iv.b.coeff
        k_min = ceil_strict(Fraction(-b, 2))
        k_max = floor_strict(Fraction(2 - a, 2))
        for k in range(k_min, k_max + 1):
            lo = max(Fraction(0), a + 2 * k)
            hi = min(Fraction(2), b + 2 * k)
            if lo < hi:
                folded.append((lo, hi, v))
    points = sorted({p for lo, hi, _ in folded for p in (lo, hi)})
    profile = []
    for x, y in zip(points, points[1:]):
        power = sum(abs(v) ** 2 for lo, hi, v in folded if lo <= x and y <= hi)
        profile.append((Interval(pi_mult(x), pi_mult(y)), power))
    return profile
