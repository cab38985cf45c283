import itertools
import math

import numpy as np
import pytest

from quditcut.linalg import (
    MixedRadixSpec,
    StateVector,
    kron,
    kron_vec,
    mixed_radix_decode,
    mixed_radix_encode,
    permute_digits,
    svd,
)

X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)


def brute_kron(a, b):
    """Entrywise tensor product over all index pairs (independent oracle)."""
    da, db = a.shape[0], b.shape[0]
    out = np.zeros((da * db, da * db), dtype=complex)
    for i1 in range(da):
        for j1 in range(da):
            for i2 in range(db):
                for j2 in range(db):
                    out[i1 * db + i2, j1 * db + j2] = a[i1, j1] * b[i2, j2]
    return out


def test_kron_identity():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_pauli_blocks():
    zx = kron(Z2, X2)
    np.testing.assert_array_equal(zx[:2, :2], X2)
    np.testing.assert_array_equal(zx[2:, 2:], -X2)
    np.testing.assert_array_equal(zx[:2, 2:], np.zeros((2, 2)))


def test_kron_matches_bruteforce():
    p0 = np.diag([1.0, 0.0]).astype(complex)
    x3 = np.roll(np.eye(3, dtype=complex), 1, axis=0)
    got = kron(p0, x3)
    np.testing.assert_allclose(got, brute_kron(p0, x3), atol=1e-15)
    np.testing.assert_array_equal(got[:3, :3], x3)
    assert np.all(got[3:, :] == 0) and np.all(got[:, 3:] == 0)


def test_kron_associative_and_multiplicative_dims():
    rng = np.random.default_rng(7)
    a, b, c = (
        rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)) for d in (2, 3, 2)
    )
    left = kron(kron(a, b), c)
    right = kron(a, kron(b, c))
    assert left.shape == (12, 12)
    np.testing.assert_allclose(left, right, atol=1e-13)


def test_kron_rejects_nonsquare():
    with pytest.raises(ValueError):
        kron(np.ones((2, 3)), np.eye(2))


def test_kron_vec_basis_states():
    a = StateVector.basis_state([2], [0])
    b = StateVector.basis_state([3], [0])
    out = kron_vec(a, b)
    assert out.dims == (2, 3)
    np.testing.assert_array_equal(out.amps, [1, 0, 0, 0, 0, 0])


def test_kron_vec_product_state():
    plus = StateVector((2,), np.array([1, 1]) / math.sqrt(2))
    one = StateVector((2,), np.array([0, 1], dtype=complex))
    out = kron_vec(plus, one)
    np.testing.assert_allclose(
        out.amps, [0, 1 / math.sqrt(2), 0, 1 / math.sqrt(2)]
    )


def test_kron_vec_matches_double_loop():
    rng = np.random.default_rng(11)
    a = StateVector((2,), rng.normal(size=2) + 1j * rng.normal(size=2))
    b = StateVector((3,), rng.normal(size=3) + 1j * rng.normal(size=3))
    out = kron_vec(a, b)
    for i in range(2):
        for j in range(3):
            assert out.amps[i * 3 + j] == pytest.approx(a.amps[i] * b.amps[j])


def test_decode_zero_is_all_zeros():
    spec = MixedRadixSpec.identity((3, 3, 2, 2))
    assert mixed_radix_decode(0, spec) == [0, 0, 0, 0]


def test_decode_out_of_range():
    spec = MixedRadixSpec.identity((2, 2))
    with pytest.raises(ValueError):
        mixed_radix_decode(5, spec)
    with pytest.raises(ValueError):
        mixed_radix_decode(-1, spec)


def test_decode_mixed_bases():
    spec = MixedRadixSpec.identity((3, 2, 2))
    assert mixed_radix_decode(7, spec) == [1, 1, 1]  # 7 = 1*4 + 1*2 + 1


@pytest.mark.parametrize(
    "bases", [(2, 3), (3, 3, 2, 2), (7, 5, 4, 3), (10, 10, 10, 10)]
)
def test_decode_encode_bijection(bases):
    spec = MixedRadixSpec.identity(bases)
    seen = set()
    for k in range(spec.size):
        digits = mixed_radix_decode(k, spec)
        assert all(0 <= d < b for d, b in zip(digits, bases))
        assert mixed_radix_encode(digits, spec) == k
        seen.add(tuple(digits))
    assert len(seen) == spec.size


def test_encode_trivia():
    assert mixed_radix_encode([0, 0, 0], MixedRadixSpec.identity((4, 3, 2))) == 0
    for j in range(5):
        assert mixed_radix_encode([j], MixedRadixSpec.identity((5,))) == j


def test_encode_all_tuples_bijective():
    spec = MixedRadixSpec.identity((2, 3))
    codes = {
        mixed_radix_encode([a, b], spec)
        for a, b in itertools.product(range(2), range(3))
    }
    assert codes == set(range(6))


def test_encode_digit_out_of_range():
    with pytest.raises(ValueError):
        mixed_radix_encode([0, 3], MixedRadixSpec.identity((2, 3)))
    with pytest.raises(ValueError):
        mixed_radix_encode([0], MixedRadixSpec.identity((2, 3)))


def test_permute_identity_and_reversal():
    ident = MixedRadixSpec((2, 2, 2, 2), (0, 1, 2, 3))
    rev = MixedRadixSpec((2, 2, 2, 2), (3, 2, 1, 0))
    assert permute_digits([1, 0, 1, 0], ident) == [1, 0, 1, 0]
    assert permute_digits([1, 0, 1, 0], rev) == [0, 1, 0, 1]


def test_permute_then_inverse_is_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        perm = tuple(int(p) for p in rng.permutation(5))
        inv = tuple(int(x) for x in np.argsort(perm))
        spec = MixedRadixSpec((2, 3, 2, 3, 2), perm)
        spec_inv = MixedRadixSpec((2, 3, 2, 3, 2), inv)
        digits = [int(rng.integers(b)) for b in spec.bases]
        assert permute_digits(permute_digits(digits, spec), spec_inv) == digits


def test_permute_fragment_swap_matches_index_reshuffle():
    # Swapping the [3,3] and [2,2] halves must agree with an independent
    # axis transpose of a random vector over those dims.
    rng = np.random.default_rng(5)
    v = rng.normal(size=36) + 1j * rng.normal(size=36)
    cut = MixedRadixSpec((3, 3, 2, 2), (2, 3, 0, 1))
    logical = MixedRadixSpec.identity((2, 2, 3, 3))
    w = v.reshape(3, 3, 2, 2).transpose(2, 3, 0, 1).reshape(-1)
    for k in range(36):
        digits = permute_digits(mixed_radix_decode(k, cut), cut)
        assert w[mixed_radix_encode(digits, logical)] == v[k]


def test_permutation_must_be_bijection():
    with pytest.raises(ValueError):
        MixedRadixSpec((2, 2), (0, 0))


def test_svd_identity_and_diag():
    _, s, _ = svd(np.eye(3, dtype=complex))
    np.testing.assert_allclose(s, [1, 1, 1], atol=1e-14)
    u, s, vh = svd(np.diag([3.0, 2.0, 1.0]).astype(complex))
    np.testing.assert_allclose(s, [3, 2, 1], atol=1e-14)
    np.testing.assert_allclose(np.abs(u), np.eye(3), atol=1e-14)
    np.testing.assert_allclose(np.abs(vh), np.eye(3), atol=1e-14)


def test_svd_reconstruction_and_parseval():
    rng = np.random.default_rng(13)
    m = rng.normal(size=(4, 9)) + 1j * rng.normal(size=(4, 9))
    u, s, vh = svd(m)
    fro = np.linalg.norm(m)
    np.testing.assert_allclose(u @ np.diag(s) @ vh, m, atol=1e-10 * fro)
    assert abs(np.sum(s**2) - fro**2) <= 1e-9 * fro**2
    assert np.all(np.diff(s) <= 0) and np.all(s >= 0)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-10)
    np.testing.assert_allclose(vh @ vh.conj().T, np.eye(4), atol=1e-10)


def test_svd_zero_matrix():
    _, s, _ = svd(np.zeros((3, 5), dtype=complex))
    np.testing.assert_array_equal(s, np.zeros(3))


def test_statevector_validation():
    with pytest.raises(ValueError):
        StateVector((2, 2), np.zeros(3))
    sv = StateVector.zero_state((2, 3))
    assert sv.size == 6
    assert sv.norm_sq() == pytest.approx(1.0)
