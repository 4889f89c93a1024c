"""Deciders for translation/dilation congruence and the wavelet-set criterion.

A set is congruent to a target when a measurable bijection moves each point
by an integer multiple of 2*pi (translation) or by a point-dependent power
of the dilation factor (dilation).  Both deciders work by folding each side
into a fundamental domain — the circle [0, 2*pi) for translations, the
annulus [pi, d*pi) in |s| for dilations — and comparing exact multiplicity
profiles.  A witness exists iff the profiles agree everywhere, and the
matched layers *are* the witness.  Everything is exact rational arithmetic:
a witness tiles with zero leftover, and there is no tolerance anywhere.

A set is a wavelet set iff it is a 2*pi-translation generator and a
2-dilation generator of partitions of the line; the two witnesses returned
on success are machine-checkable by re-assembly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .pisets import (
    Interval,
    PiRational,
    PiSet,
    ceil_strict,
    floor_strict,
    greatest_exponent_lt,
    least_exponent_gt,
    measure,
    normalize,
    pi_mult,
    piset,
)

TWO_PI_INTERVAL = piset((0, 2))
LITTLEWOOD_PALEY = piset((-2, -1), (1, 2))

_TWO_PI = PiRational(2)


@dataclass(frozen=True)
class TranslationWitness:
    """Pieces of E with integer shifts k such that {piece + 2*pi*k} tiles the target."""

    pieces: tuple[tuple[Interval, int], ...]

    def shifted_pieces(self) -> list[Interval]:
        return [Interval(iv.a.plus_turns(k), iv.b.plus_turns(k)) for iv, k in self.pieces]

    def to_json(self) -> dict:
        return {"pieces": [{"piece": iv.to_json(), "shift": k} for iv, k in self.pieces]}

    @staticmethod
    def from_json(obj: dict) -> "TranslationWitness":
        return TranslationWitness(
            tuple((Interval.from_json(p["piece"]), int(p["shift"])) for p in obj["pieces"])
        )


@dataclass(frozen=True)
class DilationWitness:
    """Pieces of G with exponents n such that {factor**n * piece} tiles the target."""

    pieces: tuple[tuple[Interval, int], ...]
    factor: Fraction = Fraction(2)

    def dilated_pieces(self) -> list[Interval]:
        return [
            Interval(iv.a * self.factor**n, iv.b * self.factor**n) for iv, n in self.pieces
        ]

    def to_json(self) -> dict:
        return {
            "factor": {"num": self.factor.numerator, "den": self.factor.denominator},
            "pieces": [{"piece": iv.to_json(), "exponent": n} for iv, n in self.pieces],
        }

    @staticmethod
    def from_json(obj: dict) -> "DilationWitness":
        f = obj.get("factor", {"num": 2, "den": 1})
        return DilationWitness(
            tuple((Interval.from_json(p["piece"]), int(p["exponent"])) for p in obj["pieces"]),
            Fraction(int(f["num"]), int(f["den"])),
        )


class FailureReason(enum.Enum):
    NOT_TRANSLATION_CONGRUENT = "NotTranslationCongruent"
    NOT_DILATION_CONGRUENT = "NotDilationCongruent"
    WRONG_MEASURE = "WrongMeasure"


@dataclass(frozen=True)
class WaveletVerdict:
    is_wavelet_set: bool
    translation: Optional[TranslationWitness]
    dilation: Optional[DilationWitness]
    failure_reason: Optional[FailureReason]

    def to_json(self) -> dict:
        return {
            "is_wavelet_set": self.is_wavelet_set,
            "translation": self.translation.to_json() if self.translation else None,
            "dilation": self.dilation.to_json() if self.dilation else None,
            "failure_reason": self.failure_reason.value if self.failure_reason else None,
        }


# -- folding -----------------------------------------------------------------
#
# A fold piece is (lo, hi, k, original_lo):  the source sub-interval lands on
# [lo, hi) of the fundamental domain after the move indexed by k; original_lo
# orders stacked layers deterministically.  All coordinates are Fraction
# coefficients of pi.


def _fold_translation(S: PiSet) -> list[tuple[Fraction, Fraction, int, Fraction]]:
    out = []
    for iv in S.intervals:
        a, b = iv.a.coeff, iv.b.coeff
        # need a + 2k < 2 and b + 2k > 0:  -b/2 < k < (2 - a)/2
        k_min = ceil_strict(Fraction(-b, 2))
        k_max = floor_strict(Fraction(2 - a, 2))
        for k in range(k_min, k_max + 1):
            lo = max(Fraction(0), a + 2 * k)
            hi = min(Fraction(2), b + 2 * k)
            if lo < hi:
                out.append((lo, hi, k, lo - 2 * k))
    return out


def _touches_zero(S: PiSet) -> bool:
    z = Fraction(0)
    return any(iv.a.coeff <= z <= iv.b.coeff for iv in S.intervals)


def _fold_dilation(S: PiSet, d: Fraction) -> list[tuple[Fraction, Fraction, int, Fraction]]:
    """Fold into the annulus [pi, d*pi) in |s|, keeping the sign."""
    out = []
    for iv in S.intervals:
        a, b = iv.a.coeff, iv.b.coeff
        if a >= 0:  # positive side: target [1, d)
            n_min = least_exponent_gt(d, b, Fraction(1))
            n_max = greatest_exponent_lt(d, a, d)
            for n in range(n_min, n_max + 1):
                lo = max(Fraction(1), a * d**n)
                hi = min(d, b * d**n)
                if lo < hi:
                    out.append((lo, hi, n, lo / d**n))
        else:  # negative side: target [-d, -1)
            n_min = least_exponent_gt(d, -a, Fraction(1))
            n_max = greatest_exponent_lt(d, -b, d)
            for n in range(n_min, n_max + 1):
                lo = max(-d, a * d**n)
                hi = min(Fraction(-1), b * d**n)
                if lo < hi:
                    out.append((lo, hi, n, lo / d**n))
    return out


def _match_layers(fold_E, fold_T):
    """Segment the fundamental domain and pair layers; None on any mismatch.

    Returns a list of (seg_lo, seg_hi, move_E, move_T) with exact Fractions.
    """
    points = sorted({p for piece in fold_E + fold_T for p in (piece[0], piece[1])})
    matches = []
    for x, y in zip(points, points[1:]):
        stack_E = sorted(
            ((orig, k) for lo, hi, k, orig in fold_E if lo <= x and y <= hi)
        )
        stack_T = sorted(
            ((orig, k) for lo, hi, k, orig in fold_T if lo <= x and y <= hi)
        )
        if len(stack_E) != len(stack_T):
            return None
        for (_, kE), (_, kT) in zip(stack_E, stack_T):
            matches.append((x, y, kE, kT))
    return matches


def _merge_pieces(pieces: list[tuple[Interval, int]]) -> tuple[tuple[Interval, int], ...]:
    pieces.sort(key=lambda p: p[0].a)
    merged: list[tuple[Interval, int]] = []
    for iv, k in pieces:
        if merged and merged[-1][1] == k and merged[-1][0].b == iv.a:
            merged[-1] = (Interval(merged[-1][0].a, iv.b), k)
        else:
            merged.append((iv, k))
    return tuple(merged)


def translation_congruent(E: PiSet, target: PiSet) -> Optional[TranslationWitness]:
    """Witness for translation congruence modulo 2*pi, or None.

    Exact: the returned pieces partition E and their 2*pi*k shifts partition
    the target with no leftover and no double cover.
    """
    if measure(E) != measure(target):
        return None
    if E.is_empty():
        return TranslationWitness(())
    matches = _match_layers(_fold_translation(E), _fold_translation(target))
    if matches is None:
        return None
    pieces = []
    for x, y, kE, kT in matches:
        iv = Interval(pi_mult(x - 2 * kE), pi_mult(y - 2 * kE))
        pieces.append((iv, kE - kT))
    witness = TranslationWitness(_merge_pieces(pieces))
    _check_translation_witness(witness, E, target)
    return witness


def _check_translation_witness(w: TranslationWitness, E: PiSet, target: PiSet) -> None:
    parts = normalize([iv for iv, _ in w.pieces])
    if parts != E or sum(iv.length().coeff for iv, _ in w.pieces) != measure(E).coeff:
        raise AssertionError("translation witness does not partition the source")
    images = w.shifted_pieces()
    if normalize(images) != target or sum(i.length().coeff for i in images) != measure(target).coeff:
        raise AssertionError("translation witness does not tile the target")


def dilation_congruent(
    G: PiSet, target: PiSet, factor: Fraction | int = 2
) -> Optional[DilationWitness]:
    """Witness for dilation congruence modulo `factor`, or None.

    Sets with an interval touching 0 fold with infinite multiplicity; they are
    congruent to a target only in the trivial literal-equality case (handled
    first).  Such sets are never dilation generators.
    """
    d = Fraction(factor)
    if d <= 1:
        raise ValueError("dilation factor must exceed 1")
    if G == target:
        return DilationWitness(tuple((iv, 0) for iv in G.intervals), d)
    if _touches_zero(G) or _touches_zero(target):
        return None
    matches = _match_layers(_fold_dilation(G, d), _fold_dilation(target, d))
    if matches is None:
        return None
    pieces = []
    for x, y, nG, nT in matches:
        iv = Interval(pi_mult(x / d**nG), pi_mult(y / d**nG))
        pieces.append((iv, nG - nT))
    witness = DilationWitness(_merge_pieces(pieces), d)
    _check_dilation_witness(witness, G, target)
    return witness


def _check_dilation_witness(w: DilationWitness, G: PiSet, target: PiSet) -> None:
    parts = normalize([iv for iv, _ in w.pieces])
    if parts != G:
        raise AssertionError("dilation witness does not partition the source")
    images = w.dilated_pieces()
    if normalize(images) != target or sum(i.length().coeff for i in images) != measure(target).coeff:
        raise AssertionError("dilation witness does not tile the target")


def is_translation_generator(E: PiSet) -> bool:
    """True iff {E + 2*pi*n} partitions the line: congruence to [0, 2*pi)."""
    return translation_congruent(E, TWO_PI_INTERVAL) is not None


def is_dilation_generator(G: PiSet, factor: Fraction | int = 2) -> bool:
    """True iff {factor**n * G} partitions R\\{0}: congruence to the annulus
    [-d*pi, -pi) u [pi, d*pi)."""
    d = Fraction(factor)
    annulus = normalize([
        Interval(pi_mult(-d), pi_mult(-1)),
        Interval(pi_mult(1), pi_mult(d)),
    ])
    return dilation_congruent(G, annulus, d) is not None


def is_spectral_for_Z(E: PiSet) -> bool:
    """Spectral-set condition for the integer lattice: the exponentials
    restricted to E form an orthonormal basis of L2(E) iff E is translation
    congruent to [0, 2*pi)."""
    return is_translation_generator(E)


def is_wavelet_set(E: PiSet) -> WaveletVerdict:
    """Both-generators criterion; reports the first failing stage
    (translation, then dilation) and returns both witnesses on success."""
    if measure(E) != _TWO_PI:
        return WaveletVerdict(False, None, None, FailureReason.WRONG_MEASURE)
    trans = translation_congruent(E, TWO_PI_INTERVAL)
    if trans is None:
        return WaveletVerdict(False, None, None, FailureReason.NOT_TRANSLATION_CONGRUENT)
    dil = dilation_congruent(E, LITTLEWOOD_PALEY)
    if dil is None:
        return WaveletVerdict(False, trans, None, FailureReason.NOT_DILATION_CONGRUENT)
    return WaveletVerdict(True, trans, dil, None)
