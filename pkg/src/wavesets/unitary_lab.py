"""Finite-dimensional unitary systems: wandering vectors, local commutants,
interpolation unitaries, and the elementary interpolation propositions as
executable checks.

A unitary system here is a finite list of d x d unitaries containing the
identity.  The local commutant at a vector x is the nullspace of the linear
map A -> ((A U_i - U_i A) x)_i over the d^2 matrix unknowns; group systems
make it coincide with the commutant, non-semigroup systems make it strictly
larger.  All rank and nullspace decisions use a single relative threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

RANK_TOL = 1e-10


@dataclass(frozen=True)
class UnitarySystem:
    dim: int
    elements: tuple[np.ndarray, ...]

    def __init__(self, elements: Sequence[np.ndarray], tol: float = RANK_TOL):
        mats = tuple(np.asarray(u, dtype=complex) for u in elements)
        if not mats:
            raise ValueError("a unitary system needs at least the identity")
        d = mats[0].shape[0]
        eye = np.eye(d)
        for u in mats:
            if u.shape != (d, d):
                raise ValueError("elements must share one square shape")
            if np.max(np.abs(u.conj().T @ u - eye)) > tol:
                raise ValueError("system element is not unitary")
        if np.max(np.abs(mats[0] - eye)) > tol:
            raise ValueError("the first element must be the identity")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "elements", mats)

    def __len__(self) -> int:
        return len(self.elements)

    def orbit(self, x: np.ndarray) -> np.ndarray:
        """Columns U_i x."""
        x = np.asarray(x, dtype=complex).reshape(self.dim)
        return np.column_stack([u @ x for u in self.elements])


@dataclass(frozen=True)
class OperatorSubspaceBasis:
    dim: int
    basis: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def contains(self, a: np.ndarray, tol: float = RANK_TOL) -> bool:
        """Membership of span, by least-squares residual."""
        if not self.basis:
            return float(np.max(np.abs(a))) <= tol
        cols = np.column_stack([b.reshape(-1) for b in self.basis])
        vec = np.asarray(a, dtype=complex).reshape(-1)
        coef, *_ = np.linalg.lstsq(cols, vec, rcond=None)
        return float(np.max(np.abs(cols @ coef - vec))) <= tol * max(1.0, float(np.max(np.abs(vec))))


def regular_representation(group_table: Sequence[Sequence[int]]) -> UnitarySystem:
    """Left regular representation from a Cayley table t[i][j] = index(g_i g_j).

    The table is fully validated (closure, identity, inverses, associativity);
    elements are reordered so the identity comes first.
    """
    t = [list(map(int, row)) for row in group_table]
    k = len(t)
    if any(len(row) != k for row in t):
        raise ValueError("group table must be square")
    if any(x < 0 or x >= k for row in t for x in row):
        raise ValueError("group table entries must index elements")
    e = None
    for i in range(k):
        if all(t[i][j] == j for j in range(k)) and all(t[j][i] == j for j in range(k)):
            e = i
            break
    if e is None:
        raise ValueError("group table has no identity")
    for i in range(k):
        if not any(t[i][j] == e for j in range(k)):
            raise ValueError("group table element lacks an inverse")
    for i in range(k):
        for j in range(k):
            for l in range(k):
                if t[t[i][j]][l] != t[i][t[j][l]]:
                    raise ValueError("group table is not associative")
    order = [e] + [i for i in range(k) if i != e]
    mats = []
    for i in order:
        m = np.zeros((k, k))
        for j in range(k):
            m[t[i][j], j] = 1.0
        mats.append(m)
    return UnitarySystem(mats)


def cyclic_group_table(k: int) -> list[list[int]]:
    return [[(i + j) % k for j in range(k)] for i in range(k)]


def is_multiplicative_semigroup(U: UnitarySystem, tol: float = 1e-8) -> bool:
    """True iff the system is closed under products (up to tol)."""
    for a in U.elements:
        for b in U.elements:
            prod = a @ b
            if not any(np.max(np.abs(prod - c)) <= tol for c in U.elements):
                return False
    return True


def _orthonormal_orbit(U: UnitarySystem, x: np.ndarray, tol: float) -> bool:
    orbit = U.orbit(x)
    gram = orbit.conj().T @ orbit
    return float(np.max(np.abs(gram - np.eye(len(U))))) <= tol


def is_wandering_vector(U: UnitarySystem, x: np.ndarray, tol: float = RANK_TOL) -> bool:
    """True iff {U x} is orthonormal; requires a unit vector."""
    x = np.asarray(x, dtype=complex)
    if abs(np.linalg.norm(x) - 1.0) > tol:
        raise ValueError("wandering-vector test requires a unit vector")
    return _orthonormal_orbit(U, x, tol)


def is_complete_wandering_vector(
    U: UnitarySystem, x: np.ndarray, tol: float = RANK_TOL
) -> bool:
    """Orthonormal orbit spanning the whole space."""
    x = np.asarray(x, dtype=complex)
    if abs(np.linalg.norm(x) - 1.0) > tol:
        raise ValueError("wandering-vector test requires a unit vector")
    if not _orthonormal_orbit(U, x, tol):
        return False
    return np.linalg.matrix_rank(U.orbit(x), tol=tol) == U.dim


def _constraint_matrix(U: UnitarySystem, x: np.ndarray) -> np.ndarray:
    """Rows of the linear map A -> ((A U - U A) x) over vec(A), row-major."""
    d = U.dim
    x = np.asarray(x, dtype=complex).reshape(d)
    blocks = []
    for u in U.elements[1:]:  # identity contributes zero rows
        ux = u @ x
        m = np.zeros((d, d * d), dtype=complex)
        for i in range(d):
            m[i, i * d : (i + 1) * d] = ux
            for kk in range(d):
                m[i, kk * d : (kk + 1) * d] -= u[i, kk] * x
        blocks.append(m)
    return np.vstack(blocks) if blocks else np.zeros((0, d * d), dtype=complex)


def _nullspace_basis(m: np.ndarray, cols: int, tol: float) -> list[np.ndarray]:
    if m.shape[0] == 0:
        return [v.reshape(int(np.sqrt(cols)), -1) for v in np.eye(cols, dtype=complex)]
    _, s, vh = np.linalg.svd(m)
    rank = int(np.sum(s > tol * (s[0] if s.size else 1.0)))
    d = int(np.sqrt(cols))
    return [vh[i].conj().reshape(d, d) for i in range(rank, cols)]


def local_commutant(
    U: UnitarySystem, x: np.ndarray, tol: float = RANK_TOL
) -> OperatorSubspaceBasis:
    """Basis of C_x(U) = {A : (A U_i - U_i A) x = 0 for all i}."""
    basis = _nullspace_basis(_constraint_matrix(U, x), U.dim**2, tol)
    return OperatorSubspaceBasis(U.dim, tuple(basis))


def commutant(U: UnitarySystem, tol: float = RANK_TOL) -> OperatorSubspaceBasis:
    """Basis of {A : A U_i = U_i A for all i} (the full commutant)."""
    d = U.dim
    eye = np.eye(d)
    blocks = []
    for u in U.elements[1:]:
        blocks.append(np.kron(eye, u.T) - np.kron(u, eye))  # row-major vec(AU - UA)
    m = np.vstack(blocks) if blocks else np.zeros((0, d * d), dtype=complex)
    basis = _nullspace_basis(m, d * d, tol)
    return OperatorSubspaceBasis(d, tuple(basis))


def interpolation_unitary(
    U: UnitarySystem, psi: np.ndarray, eta: np.ndarray, tol: float = RANK_TOL
) -> np.ndarray:
    """The unique V with V U_i psi = U_i eta; checked unitary and locally
    commuting at psi."""
    if not is_complete_wandering_vector(U, psi, tol):
        raise ValueError("psi is not a complete wandering vector")
    if not is_complete_wandering_vector(U, eta, tol):
        raise ValueError("eta is not a complete wandering vector")
    psi_orbit = U.orbit(psi)  # unitary matrix: complete orthonormal orbit
    eta_orbit = U.orbit(eta)
    v = eta_orbit @ psi_orbit.conj().T
    if np.max(np.abs(v.conj().T @ v - np.eye(U.dim))) > tol:
        raise AssertionError("interpolation operator failed the unitarity check")
    residual = max(
        float(np.max(np.abs((v @ u - u @ v) @ psi))) for u in U.elements
    )
    if residual > tol:
        raise AssertionError("interpolation operator escaped the local commutant")
    return v


def riesz_combination_check(
    U: UnitarySystem,
    psi1: np.ndarray,
    psi2: np.ndarray,
    lam: complex,
    cond_threshold: float = 1e8,
) -> bool:
    """Is psi1 + lam * psi2 a complete Riesz vector?  (Synthesis matrix of its
    orbit invertible with condition number below the threshold.)"""
    for v in (psi1, psi2):
        if not is_complete_wandering_vector(U, v):
            raise ValueError("inputs must be complete wandering vectors")
    orbit = U.orbit(np.asarray(psi1, dtype=complex) + lam * np.asarray(psi2, dtype=complex))
    s = np.linalg.svd(orbit, compute_uv=False)
    if s[-1] <= 0:
        return False
    return bool(s[0] / s[-1] < cond_threshold)


def interpolation_pair_test(
    U: UnitarySystem,
    psi: np.ndarray,
    eta: np.ndarray,
    alpha: float,
    tol: float = RANK_TOL,
) -> tuple[bool, bool]:
    """(rho is a complete wandering vector, V^2 = I) for
    rho = cos(alpha) psi + i sin(alpha) eta, 0 < alpha < pi/2.

    The two booleans are computed independently; they agree for every valid
    pair (the Prop. 4 / Prop. 5 biconditional)."""
    if not 0 < alpha < np.pi / 2:
        raise ValueError("alpha must lie strictly between 0 and pi/2")
    psi = np.asarray(psi, dtype=complex)
    eta = np.asarray(eta, dtype=complex)
    rho = np.cos(alpha) * psi + 1j * np.sin(alpha) * eta
    rho_wandering = (
        abs(np.linalg.norm(rho) - 1.0) <= tol
        and _orthonormal_orbit(U, rho, tol)
        and np.linalg.matrix_rank(U.orbit(rho), tol=tol) == U.dim
    )
    v = interpolation_unitary(U, psi, eta, tol)
    v_squared_identity = bool(np.max(np.abs(v @ v - np.eye(U.dim))) <= tol)
    return rho_wandering, v_squared_identity


def parseval_frame_vector_check(
    U: UnitarySystem, x: np.ndarray, psi: np.ndarray, tol: float = RANK_TOL
) -> tuple[str, np.ndarray]:
    """Classify {U x} against a known complete wandering vector psi.

    Returns (classification, A) with A the unique local-commutant operator
    sending psi to x.  Classification: 'wandering' (orthonormal basis orbit,
    A unitary), 'parseval_frame_vector' (Parseval frame for its span, A a
    partial isometry; co-isometry when the span is everything), or 'neither'.
    For group systems a complete Parseval orbit is forced to be wandering and
    this is asserted."""
    if not is_complete_wandering_vector(U, psi, tol):
        raise ValueError("psi must be a complete wandering vector")
    x = np.asarray(x, dtype=complex)
    psi_orbit = U.orbit(psi)
    a = U.orbit(x) @ psi_orbit.conj().T  # A U_i psi = U_i x
    orbit = U.orbit(x)
    if abs(np.linalg.norm(x) - 1.0) <= tol and _orthonormal_orbit(U, x, tol) and np.linalg.matrix_rank(orbit, tol=tol) == U.dim:
        return "wandering", a
    s = orbit @ orbit.conj().T  # frame operator of the orbit
    u_full, sv, _ = np.linalg.svd(orbit)
    rank = int(np.sum(sv > tol))
    # Parseval for the span <=> the frame operator is the span projection
    u_basis = u_full[:, :rank]
    proj = u_basis @ u_basis.conj().T
    if np.max(np.abs(s - proj)) <= tol:
        ata = a.conj().T @ a
        if np.max(np.abs(ata @ ata - ata)) > tol:
            raise AssertionError("factor of a Parseval orbit must be a partial isometry")
        if rank == U.dim:
            if np.max(np.abs(a @ a.conj().T - np.eye(U.dim))) > tol:
                raise AssertionError("complete Parseval factor must be a co-isometry")
            if is_multiplicative_semigroup(U):
                # complete Parseval orbits of group systems are wandering
                raise AssertionError(
                    "group system produced a complete Parseval non-wandering orbit"
                )
        return "parseval_frame_vector", a
    return "neither", a
