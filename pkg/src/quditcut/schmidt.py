"""Operator-Schmidt decomposition of a two-qudit operator by SVD.

Reshuffling the indices of a (d1*d2) x (d1*d2) matrix from
((i1,i2),(j1,j2)) to ((i1,j1),(i2,j2)) turns the tensor-product structure
into ordinary matrix rank, so an SVD of the reshuffled d1^2 x d2^2 matrix
yields the minimal expansion U = sum_i sigma_i A_i (x) B_i.  The retained
term count is the operator Schmidt rank; for the controlled shift it is
min(d1, d2).

The sqrt(sigma) factors are folded into both local operators (coefficient 1
per term), which balances fragment amplitudes and reduces float cancellation
at large dimension; the raw sigma list is kept for reporting.  Local factors
are generally not unitary; downstream simulation only requires linearity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import as_operator, svd

__all__ = ["SchmidtDecomposition", "operator_schmidt", "schmidt_rank"]


@dataclass(frozen=True)
class SchmidtDecomposition:
    d1: int
    d2: int
    sigmas: tuple[float, ...]
    ops_a: tuple[np.ndarray, ...] = field(repr=False)
    ops_b: tuple[np.ndarray, ...] = field(repr=False)
    tolerance: float

    @property
    def term_count(self) -> int:
        return len(self.sigmas)

    def local_terms(self) -> list[tuple[complex, np.ndarray, np.ndarray]]:
        return [(1.0 + 0.0j, a, b) for a, b in zip(self.ops_a, self.ops_b)]


def _reshuffle(u: np.ndarray, d1: int, d2: int) -> np.ndarray:
    return u.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3).reshape(d1 * d1, d2 * d2)


def operator_schmidt(
    u: np.ndarray, d1: int, d2: int, tolerance: float | None = None
) -> SchmidtDecomposition:
    """Minimal local-operator-pair expansion of ``u`` on dimensions (d1, d2).

    Singular values <= tolerance are dropped; the default cutoff
    1e-10 * sigma_max separates rank from numerical noise.
    """
    u = as_operator(u)
    if u.shape[0] != d1 * d2:
        raise ValueError(
            f"operator dimension {u.shape[0]} != d1*d2 = {d1 * d2}"
        )
    left, sigmas, right = svd(_reshuffle(u, d1, d2))
    if tolerance is None:
        tolerance = 1e-10 * (float(sigmas[0]) if sigmas.size else 0.0)
    elif tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")
    keep = int(np.sum(sigmas > tolerance))
    ops_a = []
    ops_b = []
    for i in range(keep):
        root = math.sqrt(float(sigmas[i]))
        ops_a.append(root * left[:, i].reshape(d1, d1))
        ops_b.append(root * right[i, :].reshape(d2, d2))
    return SchmidtDecomposition(
        d1,
        d2,
        tuple(float(s) for s in sigmas[:keep]),
        tuple(ops_a),
        tuple(ops_b),
        float(tolerance),
    )


def schmidt_rank(u: np.ndarray, d1: int, d2: int) -> int:
    """Operator Schmidt rank: number of singular values above the cutoff."""
    return operator_schmidt(u, d1, d2).term_count
