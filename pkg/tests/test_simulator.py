import math
from functools import reduce

import numpy as np
import pytest
from conftest import random_state, random_unitary

from quditcut.bench import dummy_circuit
from quditcut.gates import GateSpec, csum, hadamard_qudit
from quditcut.linalg import StateVector, kron
from quditcut.simulator import Circuit, apply_single, apply_two, probabilities, run


def dense_single(op, dims, target):
    """Full register matrix I (x) ... (x) op (x) ... (x) I (oracle)."""
    mats = [np.eye(d, dtype=complex) for d in dims]
    mats[target] = op
    return reduce(kron, mats)


def dense_two(op, dims, q_hi):
    mats = [np.eye(d, dtype=complex) for d in dims]
    left = reduce(kron, mats[:q_hi], np.eye(1, dtype=complex))
    right = reduce(kron, mats[q_hi + 2 :], np.eye(1, dtype=complex))
    return kron(kron(left, op), right)


def test_apply_single_identity():
    state = StateVector.zero_state((2, 3))
    out = apply_single(state, np.eye(3, dtype=complex), 1)
    np.testing.assert_array_equal(out.amps, state.amps)


def test_apply_single_hadamard():
    out = apply_single(StateVector.zero_state((2,)), hadamard_qudit(2), 0)
    np.testing.assert_allclose(out.amps, [1 / math.sqrt(2), 1 / math.sqrt(2)])


def test_apply_single_matches_dense_kron():
    rng = np.random.default_rng(31)
    dims = (2, 3, 2)
    state = StateVector(dims, random_state(rng, 12))
    op = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    got = apply_single(state, op, 1)
    want = dense_single(op, dims, 1) @ state.amps
    np.testing.assert_allclose(got.amps, want, atol=1e-12)


def test_apply_single_dim_mismatch():
    with pytest.raises(ValueError):
        apply_single(StateVector.zero_state((2, 3)), np.eye(2, dtype=complex), 1)


def test_apply_two_identity():
    state = StateVector.zero_state((2, 2, 3))
    out = apply_two(state, np.eye(6, dtype=complex), 1, 2)
    np.testing.assert_array_equal(out.amps, state.amps)


def test_apply_two_cnot_truth_table():
    state = StateVector.basis_state((2, 2), [1, 0])
    out = apply_two(state, csum(2, 2), 0, 1)
    np.testing.assert_allclose(out.amps, StateVector.basis_state((2, 2), [1, 1]).amps)


def test_apply_two_matches_dense_kron():
    rng = np.random.default_rng(32)
    dims = (2, 2, 3, 2)
    state = StateVector(dims, random_state(rng, 24))
    got = apply_two(state, csum(2, 3), 1, 2)
    want = dense_two(csum(2, 3), dims, 1) @ state.amps
    np.testing.assert_allclose(got.amps, want, atol=1e-12)


def test_apply_two_requires_adjacent():
    state = StateVector.zero_state((2, 2, 2))
    with pytest.raises(ValueError, match="unsupported layout"):
        apply_two(state, csum(2, 2), 0, 2)
    with pytest.raises(ValueError, match="unsupported layout"):
        apply_two(state, csum(2, 2), 2, 1)


def test_run_empty_circuit_returns_initial():
    circuit = Circuit((2, 3), ())
    out = run(circuit)
    np.testing.assert_array_equal(out.amps, StateVector.zero_state((2, 3)).amps)


def test_run_layered_circuit_hits_published_probabilities():
    state = run(dummy_circuit((2, 2, 2, 2)))
    probs = probabilities(state)
    assert probs[0b1111] == pytest.approx(0.35634, abs=5e-6)
    assert probs[0b1110] == pytest.approx(0.17471, abs=5e-6)


def test_run_rejects_mismatched_initial():
    with pytest.raises(ValueError):
        run(Circuit((2, 2), ()), StateVector.zero_state((2, 3)))


def test_probabilities_plus_state():
    plus = StateVector((2,), np.array([1, 1]) / math.sqrt(2))
    np.testing.assert_allclose(probabilities(plus), [0.5, 0.5])


def test_probabilities_unnormalized_passthrough():
    np.testing.assert_allclose(
        probabilities(StateVector((2,), np.array([2.0, 0.0]))), [4.0, 0.0]
    )


@pytest.mark.parametrize("dims", [(2, 2, 2, 2), (3, 3, 3), (2, 3, 2), (4, 4, 4)])
def test_unitary_circuits_preserve_norm(dims):
    state = run(dummy_circuit(dims))
    assert abs(math.sqrt(state.norm_sq()) - 1.0) <= 1e-10


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 3, 4), (4, 4, 4, 4), (6, 6, 7)])
def test_kernels_match_dense_oracle(dims):
    rng = np.random.default_rng(sum(dims))
    n = math.prod(dims)
    assert n <= 256
    state = StateVector(dims, random_state(rng, n))

    target = int(rng.integers(len(dims)))
    op = random_unitary(rng, dims[target])
    np.testing.assert_allclose(
        apply_single(state, op, target).amps,
        dense_single(op, dims, target) @ state.amps,
        atol=1e-12,
    )

    q = int(rng.integers(len(dims) - 1))
    op2 = random_unitary(rng, dims[q] * dims[q + 1])
    np.testing.assert_allclose(
        apply_two(state, op2, q, q + 1).amps,
        dense_two(op2, dims, q) @ state.amps,
        atol=1e-12,
    )


def test_run_is_linear_in_initial_state():
    rng = np.random.default_rng(55)
    circuit = dummy_circuit((2, 3, 2))
    psi = StateVector(circuit.dims, random_state(rng, 12))
    phi = StateVector(circuit.dims, random_state(rng, 12))
    alpha, beta = 0.3 - 1.1j, -0.8 + 0.2j
    mixed = StateVector(circuit.dims, alpha * psi.amps + beta * phi.amps)
    lhs = run(circuit, mixed).amps
    rhs = alpha * run(circuit, psi).amps + beta * run(circuit, phi).amps
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_circuit_validates_targets():
    with pytest.raises(ValueError):
        Circuit((2, 2), (GateSpec("H", (2,)),))
    with pytest.raises(ValueError):
        Circuit((2, 1), ())
