"""Closed-form Gram machinery against independent quadrature oracles."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from wavesets.analysis import (
    eval_haar,
    gram_window,
    inner_product,
    phase_modulate,
    time_samples,
)
from wavesets.congruence import LITTLEWOOD_PALEY
from wavesets.families import journe, shannon, shannon_path, subset_extension
from wavesets.pisets import Fraction as _F  # noqa: F401
from wavesets.pisets import interval, pi_mult, piset
from wavesets.symbols import DilationPeriodicFunction, dpf_constant, msf_symbol

AMP = 1.0 / math.sqrt(2.0 * math.pi)


def _sym_values(sym, xs: np.ndarray) -> np.ndarray:
    out = np.zeros(len(xs), dtype=complex)
    for iv, v in sym.pieces:
        out[(xs >= float(iv.a)) & (xs < float(iv.b))] = v
    return out


def quadrature_pairing(sym, n1, l1, n2, l2, points=200_000):
    """Midpoint-rule oracle for <D^n1 T^l1 f, D^n2 T^l2 f>."""
    lo = min(float(iv.a) for iv, _ in sym.pieces)
    hi = max(float(iv.b) for iv, _ in sym.pieces)
    span_lo = min(lo * 2.0**n1, lo * 2.0**n2, -0.1)
    span_hi = max(hi * 2.0**n1, hi * 2.0**n2, 0.1)
    xs = np.linspace(span_lo, span_hi, points, endpoint=False)
    dx = xs[1] - xs[0]
    xs = xs + dx / 2
    g1 = 2.0 ** (-n1 / 2) * np.exp(-1j * l1 * 2.0**-n1 * xs) * _sym_values(sym, 2.0**-n1 * xs)
    g2 = 2.0 ** (-n2 / 2) * np.exp(-1j * l2 * 2.0**-n2 * xs) * _sym_values(sym, 2.0**-n2 * xs)
    return np.sum(g1 * np.conj(g2)) * dx


def test_inner_product_shannon_examples():
    sym = msf_symbol(shannon())
    assert inner_product(sym, 0, 0, 0, 0) == pytest.approx(1.0)
    assert abs(inner_product(sym, 0, 1, 0, 0)) < 1e-15
    assert abs(inner_product(sym, 1, 0, 0, 0)) < 1e-15


def test_inner_product_matches_quadrature():
    sym = msf_symbol(journe())
    for idx in ((0, 2, 0, 0), (1, 1, 0, 3), (0, 0, 1, 2)):
        exact = inner_product(sym, *idx)
        approx = quadrature_pairing(sym, *idx)
        assert abs(exact - approx) < 2e-3


def test_inner_product_hermitian_symmetry_is_exact():
    sym = msf_symbol(journe())
    for idx in ((0, 1, 1, 2), (2, -3, -1, 4), (1, 0, 1, 0)):
        n1, l1, n2, l2 = idx
        assert inner_product(sym, n1, l1, n2, l2) == inner_product(sym, n2, l2, n1, l1).conjugate()
    diag = inner_product(sym, 1, 2, 1, 2)
    assert diag.imag == 0.0


def test_gram_window_identities():
    assert gram_window(msf_symbol(shannon()), 1, 2).deviation_from_identity() < 1e-12
    assert gram_window(msf_symbol(journe()), 2, 4).deviation_from_identity() < 1e-12
    assert gram_window(msf_symbol(shannon_path(pi_mult(1, 2))), 2, 4).deviation_from_identity() < 1e-12


def test_gram_window_shape_and_hermitian():
    g = gram_window(msf_symbol(shannon()), 2, 6)
    assert g.entries.shape == (65, 65)
    assert np.max(np.abs(g.entries - g.entries.conj().T)) == 0.0
    assert g.labels[0] == (-2, -6)


def test_hardy_symbol_gram_is_identity():
    # the half-line set gives an orthonormal (Hardy) system: every pairing is
    # exactly a delta even though the system spans only half the space, so
    # the Gram window cannot distinguish it from a wavelet
    g = gram_window(msf_symbol(piset((2, 4))), 2, 6)
    assert g.deviation_from_identity() < 1e-12


def test_phase_modulate_examples():
    e = shannon()
    assert phase_modulate(e, dpf_constant(0j)).pieces == msf_symbol(e).pieces

    flipped = phase_modulate(e, dpf_constant(complex(math.pi)))
    assert all(abs(v + AMP) < 1e-15 for _, v in flipped.pieces)

    h = DilationPeriodicFunction(
        LITTLEWOOD_PALEY,
        [
            (interval(-2, -1), 0j),
            (interval(1, Fraction(3, 2)), complex(math.pi / 2)),
            (interval(Fraction(3, 2), 2), 0j),
        ],
    )
    sym = phase_modulate(e, h)
    values = {(round(v.real, 12), round(v.imag, 12)) for _, v in sym.pieces}
    assert values == {(round(AMP, 12), 0.0), (0.0, round(AMP, 12))}
    assert gram_window(sym, 2, 4).deviation_from_identity() < 1e-12
    assert all(abs(abs(v) - AMP) < 1e-15 for _, v in sym.pieces)

    with pytest.raises(ValueError):
        phase_modulate(e, dpf_constant(1j))


def test_time_samples_shannon_at_zero():
    # closed form: (1/2pi) * measure(E_0) = 1
    assert time_samples(msf_symbol(shannon()), [0.0])[0] == pytest.approx(1.0)


def test_time_samples_against_quadrature():
    sym = msf_symbol(journe())
    grid = np.linspace(-3.0, 3.0, 1024)
    values = time_samples(sym, grid)
    s_lo, s_hi = float(-32 / 7 * math.pi), float(32 / 7 * math.pi)
    xs = np.linspace(s_lo, s_hi, 400_000, endpoint=False)
    dx = xs[1] - xs[0]
    xs = xs + dx / 2
    fvals = _sym_values(sym, xs)
    for t, v in zip(grid[::31], values[::31]):
        quad = AMP * np.sum(fvals * np.exp(1j * xs * t)) * dx
        assert abs(v - quad) < 1e-6


def test_time_samples_decay_envelope():
    sym = msf_symbol(journe())
    total_weight = sum(abs(v) * 1.0 for _, v in sym.pieces)
    for t in (50.0, 120.0, 333.0):
        (val,) = time_samples(sym, [t])
        bound = AMP * 2.0 * len(sym.pieces) * max(abs(v) for _, v in sym.pieces) / abs(t)
        assert abs(val) <= bound


def test_eval_haar():
    assert eval_haar(0.25) == 1.0
    assert eval_haar(0.75) == -1.0
    assert eval_haar(1.0) == -1.0
    assert eval_haar(2.0) == 0.0
    assert eval_haar(-0.1) == 0.0


def test_subset_extension_symbol_gram():
    w = subset_extension(piset((1, Fraction(5, 4))))
    assert gram_window(msf_symbol(w), 2, 4).deviation_from_identity() < 1e-12
