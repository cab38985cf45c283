"""Circuit, recipe and result file formats (documented in docs/formats.md).

Circuit files are JSON documents

    {"dims": [2,2,3,3],
     "gates": [{"name": "H", "target": 0},
               {"name": "RY", "target": 1, "theta": 0.6283185307179586},
               {"name": "CSUM", "control": 1, "target": 2},
               {"name": "UNITARY2", "control": 0, "target": 1,
                "matrix": [[re, im], ...]}]}

with matrices as row-major flat lists of [re, im] pairs.  Angles are plain
radians; the bundled circuits encode pi fractions at full float precision.
"""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .cutting import StitchedResult
from .decompose import GateDecomposition
from .gates import GateSpec
from .linalg import MixedRadixSpec
from .schmidt import SchmidtDecomposition
from .simulator import Circuit

__all__ = [
    "load_circuit",
    "parse_circuit",
    "circuit_to_dict",
    "bundled_circuit_path",
    "ensure_adjacent_layout",
    "logical_label_spec",
    "matrix_to_pairs",
    "matrix_from_pairs",
    "decomposition_to_dict",
    "schmidt_to_dict",
    "stitched_to_dict",
]

_GATE_NAMES = ("H", "RY", "RZ", "X", "CSUM", "UNITARY2")


def matrix_to_pairs(m: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(m).reshape(-1)]


def matrix_from_pairs(pairs, dim: int) -> np.ndarray:
    flat = np.array(
        [complex(re, im) for re, im in pairs], dtype=np.complex128
    )
    if flat.size != dim * dim:
        raise ValueError(
            f"matrix entry count {flat.size} != {dim}x{dim} = {dim * dim}"
        )
    return flat.reshape(dim, dim)


def parse_circuit(doc: dict) -> Circuit:
    """Build a Circuit from a parsed circuit-file document."""
    if not isinstance(doc, dict) or "dims" not in doc or "gates" not in doc:
        raise ValueError("circuit document must have 'dims' and 'gates' fields")
    dims = tuple(int(d) for d in doc["dims"])
    gates = []
    for i, entry in enumerate(doc["gates"]):
        name = entry.get("name")
        if name not in _GATE_NAMES:
            raise ValueError(f"gate {i}: unknown name {name!r}")
        if name in ("CSUM", "UNITARY2"):
            targets = (int(entry["control"]), int(entry["target"]))
        else:
            targets = (int(entry["target"]),)
        theta = float(entry["theta"]) if name in ("RY", "RZ") else None
        matrix = None
        if name == "UNITARY2":
            if max(targets) >= len(dims):
                raise ValueError(f"gate {i}: target out of range")
            joint = dims[targets[0]] * dims[targets[1]]
            matrix = matrix_from_pairs(entry["matrix"], joint)
        try:
            gates.append(GateSpec(name, targets, theta, matrix))
        except ValueError as exc:
            raise ValueError(f"gate {i}: {exc}") from exc
    return Circuit(dims, tuple(gates))


def load_circuit(path) -> Circuit:
    with open(path) as fh:
        return parse_circuit(json.load(fh))


def circuit_to_dict(circuit: Circuit) -> dict:
    gates = []
    for g in circuit.gates:
        if g.kind == "OP1":
            raise ValueError("internal OP1 insertions are not serializable")
        entry: dict = {"name": g.kind}
        if len(g.targets) == 2:
            entry["control"] = g.targets[0]
        entry["target"] = g.targets[-1]
        if g.theta is not None:
            entry["theta"] = g.theta
        if g.kind == "UNITARY2":
            entry["matrix"] = matrix_to_pairs(g.matrix)
        gates.append(entry)
    return {"dims": list(circuit.dims), "gates": gates}


def bundled_circuit_path(name: str):
    """Filesystem path of a circuit shipped with the package (e.g. dummy_2222)."""
    filename = name if name.endswith(".json") else f"{name}.json"
    return resources.files("quditcut").joinpath("circuits", filename)


def ensure_adjacent_layout(circuit: Circuit) -> tuple[Circuit, tuple[int, ...]]:
    """Relabel wires so every two-qudit gate sits on (control, control+1).

    Returns the relabeled circuit and ``order``, where ``order[p]`` is the
    original wire now at position p (identity when nothing moved).  Raises
    when no single wire order can make all two-qudit gates adjacent.
    """
    n = circuit.n_qudits
    pairs = {
        g.targets for g in circuit.gates if len(g.targets) == 2
    }
    if all(t == c + 1 for c, t in pairs):
        return circuit, tuple(range(n))

    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    for c, t in sorted(pairs):
        if succ.get(c, t) != t or pred.get(t, c) != c:
            raise ValueError(
                f"unsupported layout: wire pairs {sorted(pairs)} cannot all be "
                f"made adjacent"
            )
        succ[c] = t
        pred[t] = c

    chains = []
    seen: set[int] = set()
    for head in sorted(succ):
        if head in pred:
            continue
        chain = [head]
        while chain[-1] in succ:
            nxt = succ[chain[-1]]
            if nxt in chain:
                raise ValueError(
                    f"unsupported layout: wire pairs {sorted(pairs)} form a cycle"
                )
            chain.append(nxt)
        chains.append(chain)
        seen.update(chain)
    if len(seen) != len(succ.keys() | pred.keys()):
        raise ValueError(
            f"unsupported layout: wire pairs {sorted(pairs)} form a cycle"
        )

    order = [w for chain in sorted(chains, key=min) for w in chain]
    order += [w for w in range(n) if w not in seen]
    position = {w: p for p, w in enumerate(order)}
    relabeled = tuple(
        GateSpec(g.kind, tuple(position[t] for t in g.targets), g.theta, g.matrix)
        for g in circuit.gates
    )
    dims = tuple(circuit.dims[w] for w in order)
    return Circuit(dims, relabeled), tuple(order)


def logical_label_spec(dims, order) -> MixedRadixSpec:
    """Digit spec mapping a relabeled register back to original wire labels."""
    position = {w: p for p, w in enumerate(order)}
    return MixedRadixSpec(tuple(dims), tuple(position[j] for j in range(len(order))))


def decomposition_to_dict(dec: GateDecomposition) -> dict:
    """Recipe document: operators by basis label, coefficients as [re, im]."""
    return {
        "gate": "csum",
        "d1": dec.d1,
        "d2": dec.d2,
        "method": dec.method,
        "threshold": dec.threshold,
        "residual": dec.residual,
        "terms": [
            {
                "coeff": [t.coeff.real, t.coeff.imag],
                "a": t.label_a,
                "b": t.label_b,
            }
            for t in dec.terms
        ],
    }


def schmidt_to_dict(dec: SchmidtDecomposition) -> dict:
    """Recipe document with dense local operators (sqrt-sigma folded in)."""
    return {
        "d1": dec.d1,
        "d2": dec.d2,
        "method": "schmidt",
        "tolerance": dec.tolerance,
        "folding": "sqrt-sigma",
        "sigmas": list(dec.sigmas),
        "terms": [
            {"a": matrix_to_pairs(a), "b": matrix_to_pairs(b)}
            for a, b in zip(dec.ops_a, dec.ops_b)
        ],
    }


def stitched_to_dict(result: StitchedResult) -> dict:
    return {
        "pairs": result.pair_count,
        "raw_norm": result.raw_norm,
        "tvd_vs_uncut": result.tvd_vs_uncut,
        "probabilities": result.probabilities,
    }
