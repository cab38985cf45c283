import numpy as np
import pytest

from quditcut.gellmann import full_basis, full_basis_labels, gellmann_basis

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def test_d2_is_pauli():
    basis = gellmann_basis(2)
    assert basis.labels == ("sym(0,1)", "asym(0,1)", "diag(1)")
    np.testing.assert_array_equal(basis.elements[0], PAULI_X)
    np.testing.assert_array_equal(basis.elements[1], PAULI_Y)
    np.testing.assert_array_equal(basis.elements[2], PAULI_Z)


def test_element_count_and_norm_d3():
    basis = gellmann_basis(3)
    assert len(basis.elements) == 8
    for g in basis.elements:
        assert np.trace(g @ g) == pytest.approx(2.0, abs=1e-12)


def test_gram_matrix_d5():
    # Pairwise Hilbert-Schmidt inner products, brute force.
    basis = gellmann_basis(5)
    assert len(basis.elements) == 24
    gram = np.array(
        [[np.trace(a @ b) for b in basis.elements] for a in basis.elements]
    )
    np.testing.assert_allclose(gram, 2 * np.eye(24), atol=1e-12)


@pytest.mark.parametrize("d", range(2, 9))
def test_hermitian_traceless(d):
    for g in gellmann_basis(d).elements:
        np.testing.assert_allclose(g, g.conj().T, atol=1e-14)
        assert abs(np.trace(g)) <= 1e-12


def test_full_basis_counts():
    b2 = full_basis(2)
    assert len(b2) == 4
    np.testing.assert_array_equal(b2[0], np.eye(2))
    np.testing.assert_array_equal(b2[1], PAULI_X)
    assert len(full_basis(3)) == 9
    assert full_basis_labels(2) == ["I", "sym(0,1)", "asym(0,1)", "diag(1)"]


@pytest.mark.parametrize("d", range(2, 9))
def test_completeness(d):
    # Any matrix must be reproduced by its trace-inner-product expansion.
    rng = np.random.default_rng(40 + d)
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    recon = np.zeros((d, d), dtype=complex)
    for b in full_basis(d):
        recon += (np.trace(m @ b) / np.trace(b @ b)) * b
    np.testing.assert_allclose(recon, m, atol=1e-12)


def test_orthogonality_including_identity():
    basis = full_basis(4)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if i != j:
                assert abs(np.trace(a @ b)) <= 1e-12


def test_rejects_small_dimension():
    with pytest.raises(ValueError):
        gellmann_basis(1)
