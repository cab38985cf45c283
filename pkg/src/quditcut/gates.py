"""Concrete gates on qudits of arbitrary dimension.

Conventions (see README):

* ``H`` generalizes to the discrete Fourier matrix F(j,k) = w^{jk}/sqrt(d).
* ``RY``/``RZ`` are the standard 2-level rotations embedded on levels {0,1},
  identity on levels >= 2.
* ``CSUM`` is the controlled shift sum_r P_r (x) X^{r mod d2}; the control is
  the first (most significant) tensor factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GateSpec",
    "shift_x",
    "projector",
    "csum",
    "hadamard_qudit",
    "rotation_qudit",
]

# Gate kinds carried by circuit files plus OP1, the internal single-qudit
# explicit-matrix insertion used for fragment execution.
_ONE_QUDIT_KINDS = {"H", "RY", "RZ", "X", "OP1"}
_TWO_QUDIT_KINDS = {"CSUM", "UNITARY2"}


@dataclass(frozen=True)
class GateSpec:
    """One circuit entry: a named gate, its target qudit(s) and parameters."""

    kind: str
    targets: tuple[int, ...]
    theta: float | None = None
    matrix: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if self.kind in _ONE_QUDIT_KINDS:
            if len(self.targets) != 1:
                raise ValueError(f"{self.kind} takes one target, got {self.targets}")
        elif self.kind in _TWO_QUDIT_KINDS:
            if len(self.targets) != 2 or self.targets[0] == self.targets[1]:
                raise ValueError(
                    f"{self.kind} takes two distinct targets, got {self.targets}"
                )
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind in ("RY", "RZ"):
            if self.theta is None:
                raise ValueError(f"{self.kind} requires an angle")
        elif self.theta is not None:
            raise ValueError(f"{self.kind} does not take an angle")
        if self.kind in ("UNITARY2", "OP1"):
            if self.matrix is None:
                raise ValueError(f"{self.kind} requires an explicit matrix")
            object.__setattr__(
                self, "matrix", np.asarray(self.matrix, dtype=np.complex128)
            )
        elif self.matrix is not None:
            raise ValueError(f"{self.kind} does not take an explicit matrix")

    @property
    def control(self) -> int:
        if self.kind not in _TWO_QUDIT_KINDS:
            raise ValueError(f"{self.kind} has no control qudit")
        return self.targets[0]

    @property
    def target(self) -> int:
        return self.targets[-1]


def shift_x(d: int, r: int = 1) -> np.ndarray:
    """Cyclic shift X^r: |j> -> |(j+r) mod d>."""
    if d < 2:
        raise ValueError(f"invalid dimension {d}: need d >= 2")
    if r < 0:
        raise ValueError(f"exponent must be >= 0, got {r}")
    m = np.zeros((d, d), dtype=np.complex128)
    cols = np.arange(d)
    m[(cols + r) % d, cols] = 1.0
    return m


def projector(d: int, r: int) -> np.ndarray:
    """Rank-1 level projector |r><r|.

    Equals I/d + (1/2) sum_k <r|G_k|r> G_k over the Gell-Mann elements; the
    direct construction is exact and the basis-sum form is exercised in tests.
    """
    if d < 2:
        raise ValueError(f"invalid dimension {d}: need d >= 2")
    if r < 0 or r >= d:
        raise ValueError(f"level {r} out of range for dimension {d}")
    m = np.zeros((d, d), dtype=np.complex128)
    m[r, r] = 1.0
    return m


def csum(d1: int, d2: int) -> np.ndarray:
    """Controlled shift sum_r P_r (x) X^{r mod d2} on dimensions (d1, d2).

    A (d1*d2) x (d1*d2) permutation matrix mapping |r,j> -> |r,(j+r) mod d2>;
    the control is the most significant factor.
    """
    if d1 < 2 or d2 < 2:
        raise ValueError(f"invalid dimensions ({d1},{d2}): need both >= 2")
    n = d1 * d2
    m = np.zeros((n, n), dtype=np.complex128)
    r = np.repeat(np.arange(d1), d2)
    j = np.tile(np.arange(d2), d1)
    m[r * d2 + (j + r) % d2, r * d2 + j] = 1.0
    return m


def hadamard_qudit(d: int) -> np.ndarray:
    """Discrete Fourier matrix F(j,k) = exp(2*pi*i*j*k/d)/sqrt(d)."""
    if d < 2:
        raise ValueError(f"invalid dimension {d}: need d >= 2")
    j = np.arange(d)
    return np.exp(2j * math.pi * np.outer(j, j) / d) / math.sqrt(d)


def rotation_qudit(kind: str, d: int, theta: float) -> np.ndarray:
    """RY/RZ on levels {0,1}, identity elsewhere."""
    if d < 2:
        raise ValueError(f"invalid dimension {d}: need d >= 2")
    m = np.eye(d, dtype=np.complex128)
    half = theta / 2.0
    if kind == "RY":
        m[0, 0] = math.cos(half)
        m[0, 1] = -math.sin(half)
        m[1, 0] = math.sin(half)
        m[1, 1] = math.cos(half)
    elif kind == "RZ":
        m[0, 0] = np.exp(-1j * half)
        m[1, 1] = np.exp(1j * half)
    else:
        raise ValueError(f"unknown rotation kind {kind!r}")
    return m
