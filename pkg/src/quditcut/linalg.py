"""Dense complex linear algebra and mixed-radix index arithmetic.

Everything here works on plain ``numpy.ndarray`` operators (square,
``complex128``) and on :class:`StateVector`, an amplitude vector tagged with
the ordered list of per-qudit dimensions.

Digit convention is big-endian throughout: qudit 0 is the leftmost character
of a state label and the most significant digit of the flat index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "StateVector",
    "MixedRadixSpec",
    "as_operator",
    "kron",
    "kron_vec",
    "mixed_radix_decode",
    "mixed_radix_encode",
    "permute_digits",
    "svd",
]


def as_operator(m: np.ndarray) -> np.ndarray:
    """Validate and return ``m`` as a square complex128 matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("operator dimension must be >= 1")
    return a


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over a mixed-radix index space.

    ``dims`` lists per-qudit dimensions, leftmost = most significant digit of
    the flat amplitude index.  Amplitudes are not required to be normalized;
    fragment executions with non-unitary insertions legitimately are not.
    """

    dims: tuple[int, ...]
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"dimensions must be >= 1, got {dims}")
        amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if amps.size != math.prod(dims):
            raise ValueError(
                f"amplitude count {amps.size} != product of dims {math.prod(dims)}"
            )
        object.__setattr__(self, "amps", amps)

    @property
    def size(self) -> int:
        return self.amps.size

    def norm_sq(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    @staticmethod
    def zero_state(dims) -> "StateVector":
        """|0...0> over the given dimension list."""
        amps = np.zeros(math.prod(dims), dtype=np.complex128)
        amps[0] = 1.0
        return StateVector(tuple(dims), amps)

    @staticmethod
    def basis_state(dims, digits) -> "StateVector":
        dims = tuple(dims)
        spec = MixedRadixSpec.identity(dims)
        amps = np.zeros(math.prod(dims), dtype=np.complex128)
        amps[mixed_radix_encode(list(digits), spec)] = 1.0
        return StateVector(dims, amps)


@dataclass(frozen=True)
class MixedRadixSpec:
    """Per-digit radices plus a bijection from logical to stored digit positions.

    ``permutation[j]`` gives, for logical output position j, the position in
    the decoded (stored-order) digit string to read from.
    """

    bases: tuple[int, ...]
    permutation: tuple[int, ...]

    def __post_init__(self):
        bases = tuple(int(b) for b in self.bases)
        perm = tuple(int(p) for p in self.permutation)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "permutation", perm)
        if any(b < 1 for b in bases):
            raise ValueError(f"radices must be >= 1, got {bases}")
        if sorted(perm) != list(range(len(bases))):
            raise ValueError(
                f"permutation {perm} is not a bijection on 0..{len(bases) - 1}"
            )

    @property
    def size(self) -> int:
        return math.prod(self.bases)

    @staticmethod
    def identity(bases) -> "MixedRadixSpec":
        bases = tuple(bases)
        return MixedRadixSpec(bases, tuple(range(len(bases))))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product of two square operators (big-endian block layout)."""
    return np.kron(as_operator(a), as_operator(b))


def kron_vec(a: StateVector, b: StateVector) -> StateVector:
    """Tensor product of two states; dims concatenate, a's digits lead."""
    amps = np.outer(a.amps, b.amps).reshape(-1)
    return StateVector(a.dims + b.dims, amps)


def mixed_radix_decode(k: int, spec: MixedRadixSpec) -> list[int]:
    """Digits of ``k`` under ``spec.bases``, most significant (bases[0]) first.

    Extraction is the usual repeated mod/divide from the least significant
    end; digits are returned in bases order.
    """
    if k < 0 or k >= spec.size:
        raise ValueError(f"index {k} out of range for bases {spec.bases}")
    digits = [0] * len(spec.bases)
    t = int(k)
    for j in range(len(spec.bases) - 1, -1, -1):
        digits[j] = t % spec.bases[j]
        t //= spec.bases[j]
    return digits


def mixed_radix_encode(digits: list[int], spec: MixedRadixSpec) -> int:
    """Inverse of :func:`mixed_radix_decode`."""
    if len(digits) != len(spec.bases):
        raise ValueError(
            f"digit count {len(digits)} != radix count {len(spec.bases)}"
        )
    k = 0
    for d, b in zip(digits, spec.bases):
        if d < 0 or d >= b:
            raise ValueError(f"digit {d} out of range for base {b}")
        k = k * b + d
    return k


def permute_digits(digits: list[int], spec: MixedRadixSpec) -> list[int]:
    """Reorder digits into logical order: out[j] = digits[permutation[j]]."""
    if len(digits) != len(spec.permutation):
        raise ValueError(
            f"digit count {len(digits)} != permutation length {len(spec.permutation)}"
        )
    return [digits[p] for p in spec.permutation]


def svd(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD: m = U @ diag(s) @ Vh, singular values descending."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"svd expects a matrix, got shape {a.shape}")
    return np.linalg.svd(a, full_matrices=False)
