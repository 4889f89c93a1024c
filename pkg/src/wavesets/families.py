"""Constructors for the concrete wavelet-set families, parameterized exactly.

Each constructor returns a canonical PiSet and (where the construction is
conditional) verifies its own postcondition with the congruence engine before
returning.  Parameters are rational multiples of pi (paths) or plain
rationals (dilation factors); irrational parameters are out of scope.
"""

from __future__ import annotations

from fractions import Fraction

from . import congruence
from .pisets import (
    Interval,
    PiRational,
    PiSet,
    dilate,
    intersect,
    normalize,
    pi_mult,
    subtract,
    translate,
    union_all,
)


def _intervals(*pairs: tuple[Fraction, Fraction]) -> PiSet:
    """Build from coefficient pairs, dropping degenerate (empty) entries."""
    out = []
    for a, b in pairs:
        if a < b:
            out.append(Interval(PiRational(a), PiRational(b)))
        elif a > b:
            raise ValueError(f"reversed interval [{a}pi, {b}pi)")
    return normalize(out)


def shannon() -> PiSet:
    """The Littlewood-Paley set [-2pi, -pi) u [pi, 2pi)."""
    return _intervals((Fraction(-2), Fraction(-1)), (Fraction(1), Fraction(2)))


def shannon_path(alpha: PiRational) -> PiSet:
    """E_alpha = [-2pi+2a, -pi+a) u [pi+a, 2pi+2a), a wavelet set for
    -pi < alpha < pi.  The boundary alpha = pi degenerates to [2pi, 4pi),
    which generates a Hardy-space basis but is not an orthogonal wavelet."""
    c = alpha.coeff
    if not (Fraction(-1) < c < Fraction(1)):
        raise ValueError("shannon_path requires -pi < alpha < pi")
    return _intervals((-2 + 2 * c, -1 + c), (1 + c, 2 + 2 * c))


def journe_path(beta: PiRational) -> PiSet:
    """J_beta, the four-interval Journé path, for -pi/7 <= beta <= pi/7.

    At the closed endpoints one interval degenerates to length zero and the
    set is a union of three intervals (still a wavelet set, unlike the open
    boundary of shannon_path).
    """
    c = beta.coeff
    if not (Fraction(-1, 7) <= c <= Fraction(1, 7)):
        raise ValueError("journe_path requires -pi/7 <= beta <= pi/7")
    return _intervals(
        (Fraction(-32, 7), -4 + 4 * c),
        (-1 + c, Fraction(-4, 7)),
        (Fraction(4, 7), 1 + c),
        (4 + 4 * c, Fraction(32, 7)),
    )


def journe() -> PiSet:
    """The classical Journé set (beta = 0); admits no multiresolution analysis."""
    return journe_path(PiRational(0))


_A_HOME = _intervals((Fraction(1), Fraction(3, 2)))  # [pi, 3pi/2)


def subset_extension(A: PiSet) -> PiSet:
    """Wavelet set W with W ∩ [pi, 3pi/2) = A, for any A ⊆ [pi, 3pi/2).

    W = [3pi/2, 2pi) u A u B u C u D with B = [2pi,3pi)\\2A,
    C = [-pi,-pi/2)\\(A-2pi), D = 2A-4pi, all computed by exact set algebra.
    Postconditions (trace equals A; W is a wavelet set) are asserted.
    """
    if not _is_subset(A, _A_HOME):
        raise ValueError("subset_extension requires A within [pi, 3pi/2)")
    base = _intervals((Fraction(3, 2), Fraction(2)))
    B = subtract(_intervals((Fraction(2), Fraction(3))), dilate(A, 1))
    C = subtract(_intervals((Fraction(-1), Fraction(-1, 2))), translate(A, -1))
    D = translate(dilate(A, 1), -2)
    W = union_all([base, A, B, C, D])
    if intersect(W, _A_HOME) != A:
        raise AssertionError("subset_extension trace mismatch")
    verdict = congruence.is_wavelet_set(W)
    if not verdict.is_wavelet_set:
        raise AssertionError("subset_extension produced a non-wavelet set")
    return W


def _is_subset(A: PiSet, B: PiSet) -> bool:
    return subtract(A, B).is_empty()


def d_dilation_set(d: Fraction | int) -> PiSet:
    """Three-interval d-wavelet set G = A u B u C for any rational d >= 2.

    A = [-2d pi/(d+1), -2pi/(d+1)), B = [2pi/(d^2-1), 2pi/(d+1)),
    C = [2d pi/(d+1), 2d^2 pi/(d^2-1)).  {A+2pi, B, C} partitions an interval
    of length 2pi and {A, B, C/d} partitions a d-dyadic annulus; both
    congruences are verified before returning.  (At d = 2 the middle interval
    B is empty.)
    """
    d = Fraction(d)
    if d < 2:
        raise ValueError("d_dilation_set requires d >= 2")
    G = _intervals(
        (-2 * d / (d + 1), -2 / (d + 1)),
        (2 / (d * d - 1), 2 / (d + 1)),
        (2 * d / (d + 1), 2 * d * d / (d * d - 1)),
    )
    if congruence.translation_congruent(G, congruence.TWO_PI_INTERVAL) is None:
        raise AssertionError("d_dilation_set is not translation congruent to [0, 2pi)")
    if not congruence.is_dilation_generator(G, d):
        raise AssertionError("d_dilation_set is not a d-dilation generator")
    return G
