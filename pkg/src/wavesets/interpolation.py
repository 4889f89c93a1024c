"""Interpolation maps between wavelet sets and the coefficient calculus.

The map sigma for an ordered pair (E, F) of wavelet sets moves each point of
E by the integer multiple of 2*pi taking it into F, and is extended to the
whole line by 2-homogeneity: sigma(s) = 2**n * sigma(2**-n * s) for
s in 2**n * E.  The map is stored only on its core E as (piece, shift)
rules; evaluation and composition apply the extension lazily.  Composition
collapses dyadic rescalings into exact per-piece affine rules, so composite
shifts are dyadic rationals (in units of 2*pi) rather than integers.

Torsion — sigma^k = identity for a finite k — is decided by exact piecewise
composition.  When torsion is present, families of 2-dilation-periodic
coefficient functions combine wavelets into new ones; the unitarity of the
k x k coefficient matrix (the Coefficient Criterion) is checked piecewise on
a common refinement of a fundamental domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import congruence
from .pisets import (
    Interval,
    PiRational,
    PiSet,
    measure,
    normalize,
    scaled_overlaps,
)
from .symbols import (
    DilationPeriodicFunction,
    FrequencySymbol,
    add_symbols,
    coset_power_profile,
    extend_onto,
    fold_point,
    scale_symbol,
)

_TWO = Fraction(2)

PIECE_CAP = 10_000


@dataclass(frozen=True)
class InterpolationMap:
    """Piecewise 2*pi-shift rules on a core set, extended 2-homogeneously.

    pieces are (piece, shift) with sigma(s) = s + 2*pi*shift on the piece;
    shifts are exact rationals (integers for congruence maps, dyadic
    rationals for composites).  Construction does not enforce that the map
    is a measure-preserving bijection — check_measure_preserving decides
    that, so corrupted maps can be represented and rejected.
    """

    domain: PiSet
    target: PiSet
    pieces: tuple[tuple[Interval, Fraction], ...]

    def __init__(
        self,
        domain: PiSet,
        target: PiSet,
        pieces: Iterable[tuple[Interval, Fraction | int]],
    ):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "target", target)
        items = sorted(((iv, Fraction(k)) for iv, k in pieces), key=lambda p: p[0].a)
        object.__setattr__(self, "pieces", tuple(items))

    def is_identity(self) -> bool:
        return self.domain == self.target and all(k == 0 for _, k in self.pieces)

    def image_pieces(self) -> list[Interval]:
        return [Interval(iv.a.plus_turns(k), iv.b.plus_turns(k)) for iv, k in self.pieces]

    def to_json(self) -> dict:
        return {
            "domain": self.domain.to_json(),
            "target": self.target.to_json(),
            "pieces": [
                {
                    "piece": iv.to_json(),
                    "shift": {"num": k.numerator, "den": k.denominator},
                }
                for iv, k in self.pieces
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "InterpolationMap":
        return InterpolationMap(
            PiSet.from_json(obj["domain"]),
            PiSet.from_json(obj["target"]),
            [
                (
                    Interval.from_json(p["piece"]),
                    Fraction(int(p["shift"]["num"]), int(p["shift"]["den"])),
                )
                for p in obj["pieces"]
            ],
        )


def identity_map(E: PiSet) -> InterpolationMap:
    return InterpolationMap(E, E, [(iv, 0) for iv in E.intervals])


def build_sigma(E: PiSet, F: PiSet) -> InterpolationMap:
    """The unique 2-homogeneous extension of the 2*pi-congruence E -> F.

    Both sets must be wavelet sets (their verdicts are checked); the
    translation congruence between them then exists and is unique.
    """
    for name, S in (("E", E), ("F", F)):
        verdict = congruence.is_wavelet_set(S)
        if not verdict.is_wavelet_set:
            raise ValueError(f"{name} is not a wavelet set ({verdict.failure_reason.value})")
    witness = congruence.translation_congruent(E, F)
    if witness is None:
        raise AssertionError("wavelet sets must be translation congruent")
    return InterpolationMap(E, F, [(iv, Fraction(k)) for iv, k in witness.pieces])


def eval_sigma(m: InterpolationMap, s: PiRational) -> PiRational:
    """sigma(s) via the lazy 2-homogeneous extension; sigma(0) = 0."""
    if s.is_zero():
        return PiRational(0)
    n, p = fold_point(s, m.domain)  # raises when outside the dilation orbit
    for iv, k in m.pieces:
        if iv.contains(p):
            return s.plus_turns(k * _TWO**n)
    raise ValueError(f"{s} is outside the dilation orbit of the map's core")


def _merge_shift_pieces(
    pieces: list[tuple[Interval, Fraction]]
) -> list[tuple[Interval, Fraction]]:
    pieces.sort(key=lambda p: p[0].a)
    merged: list[tuple[Interval, Fraction]] = []
    for iv, k in pieces:
        if merged and merged[-1][1] == k and merged[-1][0].b == iv.a:
            merged[-1] = (Interval(merged[-1][0].a, iv.b), k)
        else:
            merged.append((iv, k))
    return merged


def compose(
    m2: InterpolationMap, m1: InterpolationMap, piece_cap: int = PIECE_CAP
) -> InterpolationMap:
    """m2 ∘ m1 on m1's core, with dyadic rescalings collapsed exactly.

    A piece P of m1 lands on P + 2*pi*k1 inside m1.target; the relevant
    pieces of m2 are pulled back through powers of 2, each contributing the
    affine rule s -> s + 2*pi*(k1 + k2 * 2**n) on an exact sub-piece.
    """
    out: list[tuple[Interval, Fraction]] = []
    for P, k1 in m1.pieces:
        image = Interval(P.a.plus_turns(k1), P.b.plus_turns(k1))
        covered = Fraction(0)
        for Q, k2 in m2.pieces:
            for n, sub in scaled_overlaps(Q, image):
                back = Interval(sub.a.plus_turns(-k1), sub.b.plus_turns(-k1))
                out.append((back, k1 + k2 * _TWO**n))
                covered += sub.length().coeff
                if len(out) > piece_cap:
                    raise RuntimeError("composition exceeded the piece cap")
        if covered != P.length().coeff:
            raise ValueError("composition target does not cover an image piece")
    merged = _merge_shift_pieces(out)
    target = normalize(
        [Interval(iv.a.plus_turns(k), iv.b.plus_turns(k)) for iv, k in merged]
    )
    return InterpolationMap(m1.domain, target, merged)


def inverse(m: InterpolationMap) -> InterpolationMap:
    return InterpolationMap(
        m.target,
        m.domain,
        [(Interval(iv.a.plus_turns(k), iv.b.plus_turns(k)), -k) for iv, k in m.pieces],
    )


def torsion_order(m: InterpolationMap, k_max: int) -> Optional[int]:
    """Smallest k <= k_max with sigma^k = identity on the core, else None."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    power = m
    for k in range(1, k_max + 1):
        if power.is_identity():
            return k
        if k < k_max:
            power = compose(m, power)
    return None


def check_measure_preserving(m: InterpolationMap) -> bool:
    """Exact validity check: pieces tile the core, images tile the target."""
    pieces_total = sum(iv.length().coeff for iv, _ in m.pieces)
    if normalize([iv for iv, _ in m.pieces]) != m.domain:
        return False
    if pieces_total != measure(m.domain).coeff:
        return False
    images = m.image_pieces()
    if sum(iv.length().coeff for iv in images) != measure(m.target).coeff:
        return False
    return normalize(images) == m.target


def power_congruence(m: InterpolationMap, n: int) -> bool:
    """True iff sigma^n moves every point of the core by an integer multiple
    of 2*pi.  When it does and the core is a wavelet set, sigma^n(core) is
    verified to be a wavelet set as well."""
    if n < 1:
        raise ValueError("n must be at least 1")
    power = m
    for _ in range(n - 1):
        power = compose(m, power)
    integral = all(k.denominator == 1 for _, k in power.pieces)
    if integral and congruence.is_wavelet_set(m.domain).is_wavelet_set:
        if not congruence.is_wavelet_set(power.target).is_wavelet_set:
            raise RuntimeError("integral power image failed the wavelet-set check")
    return integral


def conjugate_multiplier(
    h: DilationPeriodicFunction, m: InterpolationMap
) -> DilationPeriodicFunction:
    """h ∘ sigma^{-1} as a dilation-periodic function on h's own domain.

    The composition of a 2-dilation-periodic function with a 2-homogeneous
    map is 2-dilation-periodic, so the result is determined by its values on
    the fundamental domain; those are read off exactly by pulling each piece
    back through the inverse map and folding through h."""
    inv = inverse(m)
    out: list[tuple[Interval, complex]] = []
    for I in h.domain.intervals:
        for Q, k_inv in inv.pieces:
            for n, sub in scaled_overlaps(Q, I):
                shift = k_inv * _TWO**n
                moved = Interval(sub.a.plus_turns(shift), sub.b.plus_turns(shift))
                for piece, value in extend_onto(h, normalize([moved])):
                    back = Interval(
                        piece.a.plus_turns(-shift), piece.b.plus_turns(-shift)
                    )
                    out.append((back, value))
    return DilationPeriodicFunction(h.domain, out)


@dataclass(frozen=True)
class CoefficientFamily:
    """k coefficient functions riding a torsion-k interpolation map."""

    order: int
    coefficients: tuple[DilationPeriodicFunction, ...]
    sigma: InterpolationMap

    def __init__(
        self,
        order: int,
        coefficients: Iterable[DilationPeriodicFunction],
        sigma: InterpolationMap,
    ):
        coeffs = tuple(coefficients)
        if order < 1 or len(coeffs) != order:
            raise ValueError("need exactly `order` coefficient functions")
        if any(c.domain != coeffs[0].domain for c in coeffs):
            raise ValueError("coefficient functions must share one fundamental domain")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "sigma", sigma)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [h.to_json() for h in self.coefficients],
            "sigma": self.sigma.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "CoefficientFamily":
        return CoefficientFamily(
            int(obj["order"]),
            [DilationPeriodicFunction.from_json(o) for o in obj["coefficients"]],
            InterpolationMap.from_json(obj["sigma"]),
        )


def _criterion_matrices(fam: CoefficientFamily):
    """Per-piece coefficient matrices on a common refinement of the domain.

    Entry (i, j) of the k x k matrix is h_{(j-i) mod k} ∘ sigma^{-i}, the
    cross-product matrix convention fixed by the k = 3 display."""
    k = fam.order
    if torsion_order(fam.sigma, k) != k:
        raise ValueError("sigma's torsion order does not match the family order")
    rows: list[list[DilationPeriodicFunction]] = [list(fam.coefficients)]
    power = fam.sigma
    for _ in range(1, k):
        rows.append([conjugate_multiplier(h, power) for h in fam.coefficients])
        power = compose(fam.sigma, power)
    domain = fam.coefficients[0].domain
    points = sorted(
        {p for row in rows for g in row for iv, _ in g.pieces for p in (iv.a, iv.b)}
    )
    for x, y in zip(points, points[1:]):
        if not domain.contains_point(x):
            continue
        matrix = [
            [_piece_value(rows[i][(j - i) % k], x) for j in range(k)] for i in range(k)
        ]
        yield Interval(x, y), matrix


def _piece_value(g: DilationPeriodicFunction, point: PiRational) -> complex:
    for iv, v in g.pieces:
        if iv.contains(point):
            return v
    raise AssertionError("refinement point escaped the fundamental domain")


def coefficient_criterion_report(
    fam: CoefficientFamily, tol: float = 1e-12
) -> list[tuple[Interval, float]]:
    """Per-piece deviation of the coefficient matrix from unitarity."""
    report = []
    k = fam.order
    for piece, matrix in _criterion_matrices(fam):
        dev = 0.0
        for i in range(k):
            for j in range(k):
                gram = sum(matrix[i][t] * matrix[j][t].conjugate() for t in range(k))
                dev = max(dev, abs(gram - (1.0 if i == j else 0.0)))
        report.append((piece, dev))
    return report


def coefficient_criterion(fam: CoefficientFamily, tol: float = 1e-12) -> bool:
    """True iff the k x k coefficient matrix is unitary on every piece."""
    return all(dev <= tol for _, dev in coefficient_criterion_report(fam, tol))


def interpolated_symbol(fam: CoefficientFamily, tol: float = 1e-12) -> FrequencySymbol:
    """(1/sqrt(2pi)) * sum_n h_n(s) * indicator(sigma^n(E)) as a symbol.

    Requires the Coefficient Criterion; the result is then the Fourier
    transform of an orthonormal wavelet, which is certified here by the
    exact Lemma-7 statement: the 2*pi-coset-aggregated modulus equals
    1/sqrt(2pi) on every folded piece."""
    if not coefficient_criterion(fam, tol):
        raise ValueError("coefficient family fails the unitarity criterion")
    E = fam.sigma.domain
    amplitude = 1.0 / math.sqrt(2.0 * math.pi)
    terms = []
    power = identity_map(E)
    for n in range(fam.order):
        support = power.target
        pieces = extend_onto(fam.coefficients[n], support)
        terms.append(scale_symbol(FrequencySymbol(pieces), amplitude))
        power = compose(fam.sigma, power)
    total = add_symbols(terms)
    target_power = 1.0 / (2.0 * math.pi)
    for piece, power_level in coset_power_profile(total):
        if abs(power_level - target_power) > tol:
            raise AssertionError(
                f"aggregated modulus off target on {piece}: {power_level}"
            )
    if measure(total.support) == PiRational(2):
        if not congruence.is_wavelet_set(total.support).is_wavelet_set:
            raise AssertionError("measure-2pi interpolated support must be a wavelet set")
    return total
