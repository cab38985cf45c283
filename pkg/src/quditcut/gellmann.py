"""Generalized Gell-Mann operator basis for a d-level system.

The d^2 - 1 elements come in three families, indexed with 0-based levels:

* symmetric ``sym(j,k)``:      |j><k| + |k><j|             for 0 <= j < k < d
* antisymmetric ``asym(j,k)``: -i(|j><k| - |k><j|)         for 0 <= j < k < d
* diagonal ``diag(l)``:        sqrt(2/(l(l+1))) * (sum_{m<l} |m><m| - l|l><l|)
                                                            for 1 <= l < d

All elements are Hermitian, traceless and satisfy Tr(G_a G_b) = 2 delta_ab.
For d=2 they are exactly the Pauli matrices X, Y, Z (in that order).

Canonical ordering is all symmetric by (j,k) lexicographic, then all
antisymmetric, then diagonal by l; decomposition term lists built on top of
this ordering are therefore deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["GellMannBasis", "gellmann_basis", "full_basis", "full_basis_labels"]


@dataclass(frozen=True)
class GellMannBasis:
    dim: int
    elements: tuple[np.ndarray, ...] = field(repr=False)
    labels: tuple[str, ...]


def _symmetric(d: int, j: int, k: int) -> np.ndarray:
    g = np.zeros((d, d), dtype=np.complex128)
    g[j, k] = 1.0
    g[k, j] = 1.0
    return g


def _antisymmetric(d: int, j: int, k: int) -> np.ndarray:
    g = np.zeros((d, d), dtype=np.complex128)
    g[j, k] = -1.0j
    g[k, j] = 1.0j
    return g


def _diagonal(d: int, l: int) -> np.ndarray:
    diag = np.zeros(d, dtype=np.complex128)
    diag[:l] = 1.0
    diag[l] = -l
    return np.diag(diag) * math.sqrt(2.0 / (l * (l + 1)))


def gellmann_basis(d: int) -> GellMannBasis:
    """The d^2 - 1 generalized Gell-Mann matrices in canonical order."""
    if d < 2:
        raise ValueError(f"invalid dimension {d}: need d >= 2")
    elements: list[np.ndarray] = []
    labels: list[str] = []
    for j in range(d):
        for k in range(j + 1, d):
            elements.append(_symmetric(d, j, k))
            labels.append(f"sym({j},{k})")
    for j in range(d):
        for k in range(j + 1, d):
            elements.append(_antisymmetric(d, j, k))
            labels.append(f"asym({j},{k})")
    for l in range(1, d):
        elements.append(_diagonal(d, l))
        labels.append(f"diag({l})")
    return GellMannBasis(d, tuple(elements), tuple(labels))


def full_basis(d: int) -> list[np.ndarray]:
    """Identity followed by the Gell-Mann elements; spans all d x d matrices."""
    return [np.eye(d, dtype=np.complex128), *gellmann_basis(d).elements]


def full_basis_labels(d: int) -> list[str]:
    return ["I", *gellmann_basis(d).labels]
