"""Unitary-system lab: wandering vectors, local commutants, and the
elementary interpolation propositions on small groups."""

import math

import numpy as np
import pytest

from wavesets.unitary_lab import (
    UnitarySystem,
    commutant,
    cyclic_group_table,
    interpolation_pair_test,
    interpolation_unitary,
    is_complete_wandering_vector,
    is_multiplicative_semigroup,
    is_wandering_vector,
    local_commutant,
    parseval_frame_vector_check,
    regular_representation,
    riesz_combination_check,
)


def dft(k):
    return np.fft.fft(np.eye(k)) / math.sqrt(k)


def circulant_unitary(rng, k):
    f = dft(k)
    return f.conj().T @ np.diag(np.exp(1j * rng.uniform(0, 2 * math.pi, k))) @ f


E = lambda k, i: np.eye(k)[i].astype(complex)  # noqa: E731


def test_regular_representation_z2():
    u = regular_representation(cyclic_group_table(2))
    assert np.array_equal(u.elements[0], np.eye(2))
    assert np.array_equal(u.elements[1], np.array([[0.0, 1.0], [1.0, 0.0]]))


def test_regular_representation_z4_cyclic_shifts():
    u = regular_representation(cyclic_group_table(4))
    shift = np.roll(np.eye(4), 1, axis=0)
    assert np.array_equal(u.elements[1], shift)
    assert all(np.array_equal(u.elements[j], np.linalg.matrix_power(shift, j)) for j in range(4))


def test_regular_representation_rejects_bad_tables():
    with pytest.raises(ValueError):
        regular_representation([[0, 1], [1, 1]])  # rows not permutations -> no inverse/identity
    # a latin square that is not associative
    bad = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ValueError):
        regular_representation(bad)


def test_wandering_vectors():
    u4 = regular_representation(cyclic_group_table(4))
    assert is_complete_wandering_vector(u4, E(4, 0))
    assert not is_wandering_vector(u4, np.ones(4) / 2.0)
    with pytest.raises(ValueError):
        is_wandering_vector(u4, np.ones(4))


def test_random_wandering_verdict_matches_gram_oracle():
    rng = np.random.default_rng(5)
    u4 = regular_representation(cyclic_group_table(4))
    for _ in range(20):
        x = rng.normal(size=4) + 1j * rng.normal(size=4)
        x /= np.linalg.norm(x)
        orbit = np.column_stack([m @ x for m in u4.elements])
        gram_ok = np.max(np.abs(orbit.conj().T @ orbit - np.eye(4))) <= 1e-10
        assert is_wandering_vector(u4, x) == gram_ok


def test_local_commutant_group_systems():
    for k in (2, 4, 8):
        u = regular_representation(cyclic_group_table(k))
        local = local_commutant(u, E(k, 0))
        full = commutant(u)
        assert len(local) == k and len(full) == k
        assert all(local.contains(b) for b in full.basis)
        assert all(full.contains(b) for b in local.basis)


def test_local_commutant_identity_system_is_everything():
    u = UnitarySystem([np.eye(3)])
    assert len(local_commutant(u, E(3, 0))) == 9


def test_local_commutant_two_element_non_semigroup():
    # one non-identity element and a generic vector: 4 unknowns minus the 2
    # scalar constraints leaves dimension 2
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    u = UnitarySystem([np.eye(2), rot])
    assert not is_multiplicative_semigroup(u)
    x = np.array([0.83, 0.29 + 0.41j])
    local = local_commutant(u, x)
    assert len(local) == 2
    # nullspace oracle on the explicit 2x4 constraint matrix
    v = rot @ x
    m = np.zeros((2, 4), dtype=complex)
    for i in range(2):
        m[i, 2 * i : 2 * i + 2] = v
        for kk in range(2):
            m[i, 2 * kk : 2 * kk + 2] -= rot[i, kk] * x
    assert np.linalg.matrix_rank(m, tol=1e-10) == 2


def test_left_module_and_separation():
    rng = np.random.default_rng(9)
    u = regular_representation(cyclic_group_table(4))
    x = E(4, 0)
    local = local_commutant(u, x)
    full = commutant(u)
    for _ in range(10):
        b = sum(rng.normal() * m for m in full.basis)
        a = sum(rng.normal() * m for m in local.basis)
        assert local.contains(b @ a)
    ev = np.column_stack([(a @ x) for a in local.basis])
    assert np.linalg.svd(ev, compute_uv=False)[-1] > 1e-10


def test_interpolation_unitary():
    u2 = regular_representation(cyclic_group_table(2))
    assert np.allclose(interpolation_unitary(u2, E(2, 0), E(2, 0)), np.eye(2))
    v = interpolation_unitary(u2, E(2, 0), E(2, 1))
    assert np.allclose(v, [[0, 1], [1, 0]])
    assert np.max(np.abs(v @ v - np.eye(2))) < 1e-12
    with pytest.raises(ValueError):
        interpolation_unitary(u2, np.ones(2) / math.sqrt(2), E(2, 0))


def test_riesz_combination():
    rng = np.random.default_rng(17)
    u4 = regular_representation(cyclic_group_table(4))
    psi1 = circulant_unitary(rng, 4) @ E(4, 0)
    psi2 = circulant_unitary(rng, 4) @ E(4, 0)
    assert riesz_combination_check(u4, psi1, psi2, 0.0)
    for lam_mod in (0.5, 2.0):
        assert riesz_combination_check(u4, psi1, psi2, lam_mod * np.exp(0.3j))
    # e1 - e2 on Z2 generates a rank-one family
    u2 = regular_representation(cyclic_group_table(2))
    assert not riesz_combination_check(u2, E(2, 0), E(2, 1), -1.0)


def test_interpolation_pair_biconditional():
    u2 = regular_representation(cyclic_group_table(2))
    assert interpolation_pair_test(u2, E(2, 0), E(2, 1), math.pi / 4) == (True, True)
    assert interpolation_pair_test(u2, E(2, 0), E(2, 0), 0.3) == (True, True)
    # order-4 unitary inside the commutant: both sides must be false
    u4 = regular_representation(cyclic_group_table(4))
    f = dft(4)
    v = f.conj().T @ np.diag([1, 1j, 1, 1]) @ f
    psi = E(4, 0)
    eta = v @ psi
    assert interpolation_pair_test(u4, psi, eta, math.pi / 4) == (False, False)


def test_parseval_frame_vector_check():
    u4 = regular_representation(cyclic_group_table(4))
    psi = E(4, 0)
    cls, a = parseval_frame_vector_check(u4, psi, psi)
    assert cls == "wandering" and np.allclose(a, np.eye(4))

    # compression onto a spectral (invariant) subspace is Parseval for it
    f = dft(4)
    proj = f.conj().T @ np.diag([1.0, 1.0, 0.0, 0.0]) @ f
    x = proj @ psi
    cls2, a2 = parseval_frame_vector_check(u4, x, psi)
    assert cls2 == "parseval_frame_vector"
    assert np.allclose(a2, proj, atol=1e-12)
    ata = a2.conj().T @ a2
    assert np.max(np.abs(ata @ ata - ata)) < 1e-10

    # a random complete wandering vector classifies as wandering (for group
    # systems complete Parseval forces wandering)
    rng = np.random.default_rng(23)
    w = circulant_unitary(rng, 4) @ psi
    cls3, _ = parseval_frame_vector_check(u4, w, psi)
    assert cls3 == "wandering"

    cls4, _ = parseval_frame_vector_check(u4, np.array([0.5, 0.5, 0, 0], dtype=complex), psi)
    assert cls4 == "neither"
