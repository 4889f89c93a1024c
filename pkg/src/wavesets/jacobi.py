"""Cyclic Jacobi eigensolver for complex Hermitian matrices.

Deterministic cyclic-by-rows sweeps with complex plane rotations; termination
when the off-diagonal Frobenius norm drops below 1e-12 relative to the input
scale.  Chosen over library eigensolvers for the decomposition paths so the
whole synthesis chain is self-contained and reproducible; numpy.linalg.eigh
serves only as an independent oracle in the tests.
"""

from __future__ import annotations

import math

import numpy as np

HERMITIAN_TOL = 1e-12


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eig(
    a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.

    Raises ValueError for non-square or non-Hermitian input and RuntimeError
    if the sweep limit is hit (does not happen for the sizes used here).
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError("matrix must be square")
    scale = max(1.0, float(np.linalg.norm(a)))
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL * scale:
        raise ValueError("matrix is not Hermitian")
    m = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([m[0, 0].real]), v
    threshold = tol * scale
    for _ in range(max_sweeps):
        if _off_norm(m) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(m[p, q]) <= threshold / (n * n):
                    continue
                _rotate(m, v, p, q)
    else:
        raise RuntimeError("Jacobi sweeps did not converge")
    eigs = np.diag(m).real.copy()
    order = np.argsort(eigs, kind="stable")
    return eigs[order], v[:, order]


def _rotate(m: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate m[p, q] with the unitary rotation J^H m J."""
    apq = m[p, q]
    phase = apq / abs(apq)
    tau = (m[q, q].real - m[p, p].real) / (2.0 * abs(apq))
    if tau >= 0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    n = m.shape[0]
    jp = np.eye(n, dtype=complex)
    jp[p, p] = c
    jp[q, q] = c
    jp[p, q] = s * phase
    jp[q, p] = -s * phase.conjugate()
    m[:, :] = jp.conj().T @ m @ jp
    m[p, q] = 0.0
    m[q, p] = 0.0
    v[:, :] = v @ jp


def hermitian_eigenvalues(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    return hermitian_eig(a, tol)[0]
