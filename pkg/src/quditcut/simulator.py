"""Dense statevector simulation over mixed-dimensional qudit registers.

Kernels apply operators by reshaping the amplitude buffer, never by
materializing the full register-sized matrix.  Two-qudit gates require
adjacent targets with the control directly above the target; the circuit
loader relabels wires when a file needs it.  Non-unitary operators are
accepted without complaint: fragment execution inserts projector-like local
operators, and normalization policy lives entirely in the reconstruction
layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import GateSpec, csum, hadamard_qudit, rotation_qudit, shift_x
from .linalg import StateVector, as_operator

__all__ = ["Circuit", "apply_single", "apply_two", "gate_matrix", "run", "probabilities"]


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a register with per-qudit dimensions."""

    dims: tuple[int, ...]
    gates: tuple[GateSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "gates", tuple(self.gates))
        if any(d < 2 for d in self.dims):
            raise ValueError(f"qudit dimensions must be >= 2, got {self.dims}")
        for g in self.gates:
            for t in g.targets:
                if t < 0 or t >= len(self.dims):
                    raise ValueError(
                        f"gate {g.kind} targets qudit {t}, register has "
                        f"{len(self.dims)} qudits"
                    )

    @property
    def n_qudits(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return math.prod(self.dims)


def apply_single(state: StateVector, op: np.ndarray, target: int) -> StateVector:
    """Apply a one-qudit operator on ``target``; returns a new state."""
    op = as_operator(op)
    d = state.dims[target]
    if op.shape[0] != d:
        raise ValueError(
            f"operator dimension {op.shape[0]} != qudit dimension {d} at {target}"
        )
    psi = state.amps.reshape(state.dims)
    out = np.tensordot(op, psi, axes=([1], [target]))
    out = np.moveaxis(out, 0, target)
    return StateVector(state.dims, out.reshape(-1))


def apply_two(
    state: StateVector, op: np.ndarray, q_hi: int, q_lo: int
) -> StateVector:
    """Apply a two-qudit operator on the adjacent pair (q_hi, q_hi+1).

    ``q_hi`` indexes the more significant factor of the operator's joint
    index.  Non-adjacent or reversed targets are an unsupported layout.
    """
    if q_lo != q_hi + 1:
        raise ValueError(
            f"unsupported layout: two-qudit targets must be adjacent with the "
            f"control above the target, got ({q_hi},{q_lo})"
        )
    op = as_operator(op)
    d = state.dims[q_hi] * state.dims[q_lo]
    if op.shape[0] != d:
        raise ValueError(
            f"operator dimension {op.shape[0]} != joint dimension {d} at "
            f"({q_hi},{q_lo})"
        )
    left = math.prod(state.dims[:q_hi])
    right = math.prod(state.dims[q_lo + 1 :])
    psi = state.amps.reshape(left, d, right)
    out = np.tensordot(op, psi, axes=([1], [1]))
    out = np.moveaxis(out, 0, 1)
    return StateVector(state.dims, out.reshape(-1))


def gate_matrix(gate: GateSpec, dims: tuple[int, ...]) -> np.ndarray:
    """Resolve a gate entry to its dense matrix for the given register."""
    if gate.kind == "H":
        return hadamard_qudit(dims[gate.target])
    if gate.kind in ("RY", "RZ"):
        return rotation_qudit(gate.kind, dims[gate.target], gate.theta)
    if gate.kind == "X":
        return shift_x(dims[gate.target])
    if gate.kind == "CSUM":
        return csum(dims[gate.control], dims[gate.target])
    if gate.kind in ("UNITARY2", "OP1"):
        return gate.matrix
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def run(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    """Apply the circuit's gates in order; no normalization is enforced."""
    if initial is None:
        state = StateVector.zero_state(circuit.dims)
    else:
        if initial.dims != circuit.dims:
            raise ValueError(
                f"initial state dims {initial.dims} != circuit dims {circuit.dims}"
            )
        state = initial
    for gate in circuit.gates:
        m = gate_matrix(gate, circuit.dims)
        if len(gate.targets) == 1:
            state = apply_single(state, m, gate.target)
        else:
            state = apply_two(state, m, gate.control, gate.target)
    return state


def probabilities(state: StateVector) -> np.ndarray:
    """Elementwise |amp|^2 with no normalization."""
    return np.abs(state.amps) ** 2
