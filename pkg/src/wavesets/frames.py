"""Finite-dimensional frame theory and targeted positive-operator
decompositions.

A frame is stored as its synthesis array: k column vectors in C^n.  The
engine covers frame bounds through the frame operator's spectrum, Naimark
dilation (completing the analysis isometry to a unitary and splitting off
the complement), strong disjointness and multiplexed recovery, and the
constructive finite analogues of the projection / weighted rank-one
decomposition theorems: trace matching plus majorization is the exact
feasibility condition, and the synthesis is the classical Schur-Horn chain
of plane rotations.  Ellipsoidal tight frames follow by rescaling: on the
surface T*S1 every tight frame of length k has frame bound
k / trace(T^-2), and the constructor reproduces that bound.

Tolerances: 1e-12 raw arithmetic, 1e-10 direct algebraic identities,
1e-8 synthesized objects (accumulated rotations).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .jacobi import hermitian_eig, hermitian_eigenvalues

IDENTITY_TOL = 1e-10
SYNTHESIS_TOL = 1e-8


class InfeasibleWeightsError(ValueError):
    """Weights fail majorization against the spectrum: the finite analogue's
    hypothesis fails (distinct from any numerical failure)."""


def _as_frame(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=complex)
    if f.ndim != 2 or f.shape[1] < 1:
        raise ValueError("frame must be an n x k synthesis array with k >= 1")
    return f


def frame_operator(f: np.ndarray) -> np.ndarray:
    """S = sum of x_j (x_j)* as the synthesis-array product F F*."""
    f = _as_frame(f)
    return f @ f.conj().T


def frame_bounds(f: np.ndarray) -> tuple[float, float]:
    """Extreme eigenvalues of the frame operator; a frame iff the lower
    bound is positive."""
    eigs = hermitian_eigenvalues(frame_operator(f))
    return float(eigs[0]), float(eigs[-1])


def is_frame(f: np.ndarray, tol: float = IDENTITY_TOL) -> bool:
    return frame_bounds(f)[0] > tol


def is_parseval(f: np.ndarray, tol: float = IDENTITY_TOL) -> bool:
    f = _as_frame(f)
    s = frame_operator(f)
    return float(np.max(np.abs(s - np.eye(f.shape[0])))) <= tol


def naimark_complement(f: np.ndarray, tol: float = IDENTITY_TOL) -> np.ndarray:
    """The strong complement G: columns (x_j ⊕ y_j) of (F* | G*) form an
    orthonormal basis of C^k.  Unique up to unitary equivalence; dim k - n."""
    f = _as_frame(f)
    n, k = f.shape
    if not is_parseval(f, tol):
        raise ValueError("Naimark complement requires a Parseval frame")
    _, s, vh = np.linalg.svd(f)
    null_cols = vh.conj().T[:, n:]  # orthonormal basis of ker F
    g = null_cols.conj().T  # (k - n) x k synthesis array
    assembled = np.hstack([f.conj().T, null_cols])
    if np.max(np.abs(assembled.conj().T @ assembled - np.eye(k))) > tol:
        raise AssertionError("Naimark assembly failed the unitarity check")
    return g


def strongly_disjoint(f: np.ndarray, g: np.ndarray, tol: float = IDENTITY_TOL) -> bool:
    """G F* = 0: the analysis ranges are orthogonal, equivalently the mixed
    reconstruction sum vanishes for every input."""
    f, g = _as_frame(f), _as_frame(g)
    if f.shape[1] != g.shape[1]:
        raise ValueError("strong disjointness needs equal frame lengths")
    cross = g @ f.conj().T
    if cross.size == 0:  # an empty complement is vacuously disjoint
        return True
    return float(np.max(np.abs(cross))) <= tol


def multiplex_roundtrip(
    f: np.ndarray,
    g: np.ndarray,
    x: np.ndarray,
    y: np.ndarray,
    check: bool = True,
    tol: float = IDENTITY_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Merge coefficients c = F*x + G*y and resynthesize both vectors.

    For strongly disjoint Parseval frames the recovery is exact; `check`
    enforces the preconditions (disable it to probe the biconditional)."""
    f, g = _as_frame(f), _as_frame(g)
    if check:
        if not (is_parseval(f, tol) and is_parseval(g, tol)):
            raise ValueError("multiplexing requires Parseval frames")
        if not strongly_disjoint(f, g, tol):
            raise ValueError("multiplexing requires strongly disjoint frames")
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    c = f.conj().T @ x + g.conj().T @ y
    return f @ c, g @ c


def majorization_check(
    eigs: Sequence[float], weights: Sequence[float], tol: float = IDENTITY_TOL
) -> bool:
    """Sorted-descending partial sums of eigs (zero-padded) dominate those of
    weights, with equal totals."""
    e = sorted((float(v) for v in eigs), reverse=True)
    w = sorted((float(v) for v in weights), reverse=True)
    if any(v < -tol for v in e) or any(v < -tol for v in w):
        raise ValueError("majorization inputs must be non-negative")
    size = max(len(e), len(w))
    e += [0.0] * (size - len(e))
    w += [0.0] * (size - len(w))
    se = sw = 0.0
    for i in range(size):
        se += e[i]
        sw += w[i]
        if se < sw - tol:
            return False
    return abs(se - sw) <= tol


@dataclass(frozen=True)
class RankOneDecomposition:
    """B ≈ sum of c_i * u_i (u_i)* with unit u_i and positive weights."""

    weights: tuple[float, ...]
    units: tuple[np.ndarray, ...]
    residual: float

    def reconstruct(self, n: int) -> np.ndarray:
        total = np.zeros((n, n), dtype=complex)
        for c, u in zip(self.weights, self.units):
            total += c * np.outer(u, u.conj())
        return total

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "units": [[[v.real, v.imag] for v in u] for u in self.units],
            "residual": self.residual,
        }


def _check_positive_hermitian(b: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    b = np.asarray(b, dtype=complex)
    n = b.shape[0]
    if b.ndim != 2 or b.shape[1] != n:
        raise ValueError("matrix must be square")
    scale = max(1.0, float(np.max(np.abs(b))))
    if np.max(np.abs(b - b.conj().T)) > tol * scale:
        raise ValueError("matrix must be Hermitian")
    return b


def _schur_horn_unitary(values: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Real orthogonal W with diag(W^H diag(values) W) = targets.

    Classical chain of plane rotations: for each target (largest first)
    rotate the two active diagonal entries straddling it so one coordinate
    hits the target exactly, then freeze that coordinate.  Off-diagonal
    fill-in touches only frozen rows, so the active block stays diagonal.
    Ties are broken by lowest index.
    """
    k = len(values)
    order = sorted(range(k), key=lambda i: -targets[i])
    m = np.diag(values.astype(complex))
    w = np.eye(k, dtype=complex)
    active = list(range(k))
    assignments: list[tuple[int, int]] = []
    for pos in order:
        t = targets[pos]
        diag = [(m[i, i].real, i) for i in active]
        if len(active) == 1:
            frozen = active[0]
        else:
            exact = [i for v, i in diag if abs(v - t) <= 1e-12]
            if exact:
                frozen = exact[0]
            else:
                above = [(v, i) for v, i in diag if v > t]
                below = [(v, i) for v, i in diag if v < t]
                if not above or not below:
                    raise InfeasibleWeightsError(
                        "no straddling pair: weights escape the spectrum"
                    )
                a_val, a_idx = min(above)
                b_val, b_idx = max(below)
                # rotate (a_idx, b_idx) so that a_idx's diagonal becomes t
                s2 = (a_val - t) / (a_val - b_val)
                c2 = 1.0 - s2
                c, s = np.sqrt(c2), np.sqrt(s2)
                rot = np.eye(k, dtype=complex)
                rot[a_idx, a_idx] = c
                rot[b_idx, b_idx] = c
                rot[a_idx, b_idx] = -s
                rot[b_idx, a_idx] = s
                m = rot.conj().T @ m @ rot
                w = w @ rot
                frozen = a_idx
        active.remove(frozen)
        assignments.append((pos, frozen))
    # permute so each frozen coordinate lands at its requested output position
    perm = np.zeros((k, k))
    for pos, frozen in assignments:
        perm[frozen, pos] = 1.0
    return w @ perm


def weighted_decomposition(
    b: np.ndarray, weights: Sequence[float], tol: float = SYNTHESIS_TOL
) -> RankOneDecomposition:
    """B = sum of c_i * u_i (u_i)* with prescribed positive weights c_i.

    Feasible exactly when the weights are majorized by the spectrum with
    matching totals (Schur-Horn); infeasibility raises
    InfeasibleWeightsError rather than failing numerically."""
    b = _check_positive_hermitian(b)
    n = b.shape[0]
    c = [float(v) for v in weights]
    if any(v <= 0 for v in c):
        raise ValueError("weights must be positive")
    k = len(c)
    eigs, vecs = hermitian_eig(b)
    if eigs[0] < -IDENTITY_TOL:
        raise ValueError("matrix must be positive semidefinite")
    if abs(sum(c) - float(np.sum(eigs))) > tol:
        raise InfeasibleWeightsError("weights must sum to the trace")
    if k < n and any(e > IDENTITY_TOL for e in eigs[: n - k]):
        raise InfeasibleWeightsError("fewer weights than the rank of the matrix")
    padded = np.zeros(k)
    take = min(n, k)
    padded[:take] = np.maximum(eigs[::-1][:take], 0.0)
    if not majorization_check(padded, c):
        raise InfeasibleWeightsError("weights are not majorized by the spectrum")
    w = _schur_horn_unitary(padded, np.array(c))
    z = (vecs @ _eig_column_map(n, k, padded)) @ w
    units = []
    for i in range(k):
        col = z[:, i]
        norm = np.linalg.norm(col)
        units.append(col / norm)
    recon = sum(ci * np.outer(u, u.conj()) for ci, u in zip(c, units))
    residual = float(np.max(np.abs(b - recon)))
    if residual > tol:
        raise AssertionError(f"decomposition residual {residual} above {tol}")
    return RankOneDecomposition(tuple(c), tuple(units), residual)


def _eig_column_map(n: int, k: int, padded: np.ndarray) -> np.ndarray:
    """n x k array A0 with A0 A0* = diag(eigs) in the eigenbasis order
    (ascending columns of `vecs`) and column norms sqrt(padded)."""
    a0 = np.zeros((n, k), dtype=complex)
    for i in range(min(n, k)):
        a0[n - 1 - i, i] = np.sqrt(padded[i])
    return a0


def projection_decomposition(
    b: np.ndarray, k: int, tol: float = SYNTHESIS_TOL
) -> RankOneDecomposition:
    """B as a sum of k rank-one projections (all weights 1).

    Feasible for every positive B with trace(B) = k >= n: the top-m
    eigenvalue averages dominate the overall average, so majorization
    against (1, ..., 1) is automatic."""
    b = _check_positive_hermitian(b)
    if k < 1:
        raise ValueError("k must be at least 1")
    tr = float(np.trace(b).real)
    if abs(tr - k) > tol:
        raise ValueError("projection decomposition requires trace(B) = k")
    return weighted_decomposition(b, [1.0] * k, tol)


def etf_construct(
    t: np.ndarray, k: int, tol: float = SYNTHESIS_TOL
) -> tuple[np.ndarray, float]:
    """Tight frame of length k on the ellipsoid T*S1, with the forced frame
    bound K = k / trace(T^-2).

    S = K * T^-2 has trace k; a projection decomposition of S gives unit
    vectors x_j, and {T x_j} is the tight frame."""
    t = _check_positive_hermitian(t)
    n = t.shape[0]
    if k < n:
        raise ValueError("ellipsoidal tight frames need k >= n")
    eigs, vecs = hermitian_eig(t)
    if eigs[0] <= IDENTITY_TOL:
        raise ValueError("T must be positive invertible")
    t_inv2 = vecs @ np.diag(1.0 / eigs**2) @ vecs.conj().T
    bound = k / float(np.trace(t_inv2).real)
    s = bound * t_inv2
    dec = projection_decomposition(s, k, tol)
    frame = t @ np.column_stack(dec.units)
    tight = frame @ frame.conj().T
    if np.max(np.abs(tight - bound * np.eye(n))) > tol:
        raise AssertionError("ellipsoidal frame failed the tightness check")
    return frame, bound
