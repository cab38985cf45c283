"""Full-basis decomposition of the controlled shift into local operator pairs.

The controlled shift on dimensions (d1, d2) is written as

    sum_r P_r (x) X^r  =  sum_i c_i A_i (x) B_i

with A_i drawn from {I} u Gell-Mann(d1) and B_i from {I} u Gell-Mann(d2).
Coefficients are extracted by trace inner products, a_B = Tr(M B) / Tr(B^2),
and merged across the r sum into a single coefficient per (A, B) pair, so a
pair appears at most once in the term list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gates import csum, projector, shift_x
from .gellmann import full_basis, full_basis_labels
from .linalg import as_operator, kron

__all__ = [
    "DecompositionTerm",
    "GateDecomposition",
    "expand_in_basis",
    "decompose_csum",
    "truncate",
]

# Coefficients below this floor are structural zeros (float dust), not
# truncation candidates; tau=0 semantics stay exact.
ZERO_FLOOR = 1e-14


@dataclass(frozen=True)
class DecompositionTerm:
    coeff: complex
    op_a: np.ndarray = field(repr=False)
    op_b: np.ndarray = field(repr=False)
    label_a: str
    label_b: str


@dataclass(frozen=True)
class GateDecomposition:
    """Weighted local-operator expansion of CSUM(d1, d2)."""

    d1: int
    d2: int
    method: str
    threshold: float
    terms: tuple[DecompositionTerm, ...]
    residual: float

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def local_terms(self) -> list[tuple[complex, np.ndarray, np.ndarray]]:
        return [(t.coeff, t.op_a, t.op_b) for t in self.terms]


def expand_in_basis(m: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    """Coefficients a_B = Tr(M B) / Tr(B^2) for each basis element B.

    For the full basis of m's dimension, sum(a_B * B) reproduces M exactly.
    """
    m = as_operator(m)
    d = m.shape[0]
    if len(basis) != d * d or any(b.shape != (d, d) for b in basis):
        raise ValueError(
            f"basis does not match operator dimension {d} (expected {d * d} "
            f"elements of shape ({d},{d}))"
        )
    coeffs = np.empty(d * d, dtype=np.complex128)
    for i, b in enumerate(basis):
        coeffs[i] = np.trace(m @ b) / np.trace(b @ b)
    return coeffs


def _reassembly_residual(
    terms: tuple[DecompositionTerm, ...], d1: int, d2: int
) -> float:
    acc = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for t in terms:
        acc += t.coeff * kron(t.op_a, t.op_b)
    return float(np.linalg.norm(acc - csum(d1, d2)))


def decompose_csum(d1: int, d2: int, threshold: float = 0.0) -> GateDecomposition:
    """Expand CSUM(d1, d2) over the asymmetric Gell-Mann bases.

    Keeps every (A, B) pair whose merged coefficient exceeds
    max(threshold, ZERO_FLOOR) in magnitude; term order is lexicographic in
    (A index, B index), so the list is deterministic.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    basis_a = full_basis(d1)
    basis_b = full_basis(d2)
    labels_a = full_basis_labels(d1)
    labels_b = full_basis_labels(d2)

    merged = np.zeros((d1 * d1, d2 * d2), dtype=np.complex128)
    for r in range(d1):
        a_r = expand_in_basis(projector(d1, r), basis_a)
        b_r = expand_in_basis(shift_x(d2, r % d2), basis_b)
        merged += np.outer(a_r, b_r)

    floor = max(threshold, ZERO_FLOOR)
    terms = tuple(
        DecompositionTerm(
            complex(merged[p, q]), basis_a[p], basis_b[q], labels_a[p], labels_b[q]
        )
        for p in range(d1 * d1)
        for q in range(d2 * d2)
        if abs(merged[p, q]) > floor
    )
    return GateDecomposition(
        d1, d2, "gellmann", threshold, terms, _reassembly_residual(terms, d1, d2)
    )


def truncate(dec: GateDecomposition, threshold: float) -> GateDecomposition:
    """Drop terms with |coeff| <= threshold; coefficients are not renormalized."""
    if threshold < dec.threshold:
        raise ValueError(
            f"truncation threshold {threshold} below current {dec.threshold}"
        )
    terms = tuple(t for t in dec.terms if abs(t.coeff) > threshold)
    return GateDecomposition(
        dec.d1,
        dec.d2,
        dec.method,
        threshold,
        terms,
        _reassembly_residual(terms, dec.d1, dec.d2),
    )
