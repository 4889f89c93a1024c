"""Gram matrices of dilation/translation systems via closed-form integrals.

All pairings reduce to integrals of e^{i*lambda*s} over intervals with
rational-pi endpoints, with lambda a dyadic rational: on the Fourier side
the translation acts as multiplication by e^{-i*l*s} and the dilation by
unitary rescaling, so matrix entries are finite sums of exact antiderivative
evaluations.  Quadrature never enters the main path; it exists only as a
test oracle.

Convention: forward transform kernel e^{-i*s*t} with factor 1/sqrt(2*pi)
(there is a competing normalized convention in the literature; this package
is locked to this one everywhere).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .pisets import PiSet
from .symbols import DilationPeriodicFunction, FrequencySymbol, extend_onto

_TWO = Fraction(2)


def _interval_exp_integral(a: Fraction, b: Fraction, lam: Fraction) -> complex:
    """Integral of e^(i*lam*s) over [a*pi, b*pi), exact antiderivative."""
    if lam == 0:
        return complex(float(b - a) * math.pi)
    lam_f = float(lam)
    upper = cmath.exp(1j * float(lam * b) * math.pi)
    lower = cmath.exp(1j * float(lam * a) * math.pi)
    return (upper - lower) / (1j * lam_f)


def inner_product(
    sym: FrequencySymbol, n1: int, l1: int, n2: int, l2: int
) -> complex:
    """<D^n1 T^l1 f, D^n2 T^l2 f> in the frequency domain.

    Computed symmetrically: the (n2,l2)-vs-(n1,l1) entry is the exact complex
    conjugate because the lexicographically smaller index pair is always the
    one evaluated."""
    if (n1, l1) > (n2, l2):
        return inner_product(sym, n2, l2, n1, l1).conjugate()
    # D-hat^n f (s) = 2^(-n/2) f(2^-n s); T-hat^l multiplies by e^(-i l s).
    scale = 2.0 ** (-(n1 + n2) / 2.0)
    lam = Fraction(l2) * _TWO**-n2 - Fraction(l1) * _TWO**-n1
    total = 0j
    f1 = _TWO**n1
    f2 = _TWO**n2
    for P, u in sym.pieces:
        a1, b1 = P.a.coeff * f1, P.b.coeff * f1
        for Q, v in sym.pieces:
            lo = max(a1, Q.a.coeff * f2)
            hi = min(b1, Q.b.coeff * f2)
            if lo < hi:
                total += u * v.conjugate() * _interval_exp_integral(lo, hi, lam)
    return scale * total


@dataclass(frozen=True)
class GramWindow:
    """All pairings for |n| <= N, |l| <= L, in row-major (n, l) order."""

    n_range: tuple[int, int]
    l_range: tuple[int, int]
    entries: np.ndarray

    @property
    def labels(self) -> list[tuple[int, int]]:
        return [
            (n, l)
            for n in range(self.n_range[0], self.n_range[1] + 1)
            for l in range(self.l_range[0], self.l_range[1] + 1)
        ]

    def deviation_from_identity(self) -> float:
        eye = np.eye(self.entries.shape[0])
        return float(np.max(np.abs(self.entries - eye)))


def gram_window(sym: FrequencySymbol, N: int, L: int) -> GramWindow:
    """Gram matrix of {D^n T^l f} over the window; Hermitian by construction.

    Entries are independent; they are evaluated in a fixed order (and the
    lower triangle mirrored) so results are deterministic."""
    if N < 0 or L < 0:
        raise ValueError("window sizes must be non-negative")
    labels = [(n, l) for n in range(-N, N + 1) for l in range(-L, L + 1)]
    size = len(labels)
    G = np.zeros((size, size), dtype=complex)
    for i, (n1, l1) in enumerate(labels):
        for j in range(i, size):
            n2, l2 = labels[j]
            val = inner_product(sym, n1, l1, n2, l2)
            G[i, j] = val
            G[j, i] = val.conjugate()
    return GramWindow((-N, N), (-L, L), G)


def phase_modulate(E: PiSet, h: DilationPeriodicFunction) -> FrequencySymbol:
    """The symbol e^(i*h~) * (1/sqrt(2pi)) * indicator(E), where h~ is the
    2-dilation-periodic extension of the real-valued h; the modulus is
    untouched, so the Gram window of the result matches the plain symbol."""
    if not h.is_real():
        raise ValueError("phase_modulate requires a real-valued phase function")
    amplitude = 1.0 / math.sqrt(2.0 * math.pi)
    pieces = [
        (iv, amplitude * cmath.exp(1j * v.real)) for iv, v in extend_onto(h, E)
    ]
    return FrequencySymbol(pieces)


def time_samples(sym: FrequencySymbol, grid: Sequence[float]) -> list[complex]:
    """Inverse transform samples psi(t) = (1/sqrt(2pi)) * integral of
    e^(i*s*t) * sym(s) ds, summed in closed form per piece; |t| < 1e-12 takes
    the limit value."""
    out = []
    amplitude = 1.0 / math.sqrt(2.0 * math.pi)
    for t in grid:
        total = 0j
        for iv, v in sym.pieces:
            a = float(iv.a)
            b = float(iv.b)
            if abs(t) < 1e-12:
                total += v * (b - a)
            else:
                total += v * (cmath.exp(1j * b * t) - cmath.exp(1j * a * t)) / (1j * t)
        out.append(amplitude * total)
    return out


def eval_haar(t: float) -> float:
    """The Haar wavelet: 1 on [0, 1/2), -1 on [1/2, 1], 0 otherwise."""
    if 0 <= t < 0.5:
        return 1.0
    if 0.5 <= t <= 1.0:
        return -1.0
    return 0.0
