"""Benchmark scaffolding: memory accounting, truncation sweeps, timing.

Memory estimates use exact integer arithmetic; ``bytes_per_amp`` selects the
accounting convention (8 for single-precision complex, 16 for the complex128
the simulator actually computes in).

Wall-clock speedups are reported, never asserted: they vary by hardware and
circuit.  Timing runs default to a single thread so the uncut/cut ratio is
meaningful; parallel fan-out is opt-in and recorded in the output.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cutting import (
    FragmentPair,
    generate_fragments,
    plan_cut,
    reconstruct_probabilities,
    stitch,
    tvd,
)
from .gates import GateSpec
from .linalg import MixedRadixSpec, StateVector
from .simulator import Circuit, run

__all__ = [
    "MemoryEstimate",
    "BenchRecord",
    "SpeedupReport",
    "estimate_memory",
    "dummy_circuit",
    "truncation_sweep",
    "speedup_report",
    "write_sweep_csv",
    "write_speedup_csv",
    "SWEEP_CSV_HEADER",
    "SPEEDUP_CSV_HEADER",
]


@dataclass(frozen=True)
class MemoryEstimate:
    """Statevector byte counts for a register and an optional cut."""

    dims: tuple[int, ...]
    cut: int | None
    bytes_per_amp: int
    full_bytes: int
    fragment_bytes: int

    def working_set_bytes(self, pairs: int) -> int:
        """Bytes held across ``pairs`` executed terms: two live buffers per
        pair at fragment size (uncut registers count the full state)."""
        return self.fragment_bytes * pairs * 2


def estimate_memory(
    dims, cut: int | None = None, bytes_per_amp: int = 8
) -> MemoryEstimate:
    """Exact integer statevector sizes for the full and fragmented register."""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("dimension list must be non-empty")
    if bytes_per_amp <= 0:
        raise ValueError(f"bytes_per_amp must be positive, got {bytes_per_amp}")
    full = math.prod(dims) * bytes_per_amp
    if cut is None:
        fragments = full
    else:
        if cut < 1 or cut >= len(dims):
            raise ValueError(
                f"cut {cut} leaves an empty fragment (need 1 <= cut <= {len(dims) - 1})"
            )
        fragments = (
            math.prod(dims[:cut]) + math.prod(dims[cut:])
        ) * bytes_per_amp
    return MemoryEstimate(dims, cut, bytes_per_amp, full, fragments)


def dummy_circuit(dims, control: int | None = None) -> Circuit:
    """Layered test circuit: H on every wire, one CSUM, then RY/RZ layers.

    Wire i carries RY(pi/(3+2i)) and RZ(pi/(4+2i)); the CSUM acts on
    (control, control+1), defaulting to the halfway boundary.
    """
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    if n < 2:
        raise ValueError("need at least two qudits")
    if control is None:
        control = max(n // 2 - 1, 0)
    if control < 0 or control + 1 >= n:
        raise ValueError(f"control {control} out of range for {n} wires")
    gates: list[GateSpec] = [GateSpec("H", (i,)) for i in range(n)]
    gates.append(GateSpec("CSUM", (control, control + 1)))
    gates.extend(
        GateSpec("RY", (i,), theta=math.pi / (3 + 2 * i)) for i in range(n)
    )
    gates.extend(
        GateSpec("RZ", (i,), theta=math.pi / (4 + 2 * i)) for i in range(n)
    )
    return Circuit(dims, tuple(gates))


@dataclass(frozen=True)
class BenchRecord:
    dims: tuple[int, ...]
    boundary: int
    method: str
    threshold: float
    term_count: int
    pair_count: int
    tvd: float
    raw_norm: float
    decompose_s: float
    simulate_s: float
    stitch_s: float
    memory: MemoryEstimate
    threads: int = 1


def _run_pairs(
    pairs: list[FragmentPair], threads: int = 1
) -> list[tuple[complex, np.ndarray, np.ndarray]]:
    def one(p: FragmentPair):
        return (p.coeff, run(p.upper).amps, run(p.lower).amps)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, pairs))
    return [one(p) for p in pairs]


def _combine(outs, dims) -> StateVector:
    acc = np.zeros(math.prod(dims), dtype=np.complex128)
    for coeff, up, lo in outs:
        acc += coeff * np.outer(up, lo).reshape(-1)
    return StateVector(dims, acc)


def truncation_sweep(
    circuit: Circuit,
    boundary: int,
    method: str,
    thresholds,
    threads: int = 1,
) -> list[BenchRecord]:
    """One record per threshold from the full cut pipeline vs the uncut oracle."""
    spec = MixedRadixSpec.identity(circuit.dims)
    reference, _ = reconstruct_probabilities(run(circuit), spec)
    memory = estimate_memory(circuit.dims, cut=boundary)

    records = []
    for tau in thresholds:
        plan = plan_cut(circuit, boundary, method, tau)
        t0 = time.perf_counter()
        pairs = generate_fragments(circuit, plan)
        t1 = time.perf_counter()
        outs = _run_pairs(pairs, threads)
        t2 = time.perf_counter()
        stitched = _combine(outs, circuit.dims)
        probs, raw_norm = reconstruct_probabilities(stitched, spec)
        t3 = time.perf_counter()
        records.append(
            BenchRecord(
                circuit.dims,
                boundary,
                method,
                float(tau),
                len(pairs),
                len(pairs),
                tvd(probs, reference),
                raw_norm,
                t1 - t0,
                t2 - t1,
                t3 - t2,
                memory,
                threads,
            )
        )
    return records


@dataclass(frozen=True)
class SpeedupReport:
    dims: tuple[int, ...]
    boundary: int
    pair_count: int
    uncut_s: tuple[float, ...]
    cut_s: tuple[float, ...]
    memory: MemoryEstimate
    threads: int = 1

    @property
    def speedup(self) -> float:
        """Mean uncut time over mean cut time."""
        return (sum(self.uncut_s) / len(self.uncut_s)) / (
            sum(self.cut_s) / len(self.cut_s)
        )


def speedup_report(
    circuit: Circuit, boundary: int, repetitions: int = 12, threads: int = 1
) -> SpeedupReport:
    """Time the uncut simulation against the Schmidt cut pipeline.

    Each repetition times one uncut run and one complete cut pipeline
    (decompose, fragment runs, recombination); raw per-run times are kept.
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    plan = plan_cut(circuit, boundary, "schmidt", 0.0)
    uncut_s = []
    cut_s = []
    pair_count = 0
    for _ in range(repetitions):
        t0 = time.perf_counter()
        run(circuit)
        t1 = time.perf_counter()
        pairs = generate_fragments(circuit, plan)
        stitch(pairs, threads=threads)
        t2 = time.perf_counter()
        uncut_s.append(t1 - t0)
        cut_s.append(t2 - t1)
        pair_count = len(pairs)
    return SpeedupReport(
        circuit.dims,
        boundary,
        pair_count,
        tuple(uncut_s),
        tuple(cut_s),
        estimate_memory(circuit.dims, cut=boundary),
        threads,
    )


SWEEP_CSV_HEADER = [
    "dims",
    "boundary",
    "method",
    "threshold",
    "term_count",
    "pair_count",
    "tvd",
    "raw_norm",
    "decompose_s",
    "simulate_s",
    "stitch_s",
    "full_bytes",
    "fragment_bytes",
    "threads",
]

SPEEDUP_CSV_HEADER = ["rep", "uncut_s", "cut_s", "speedup"]


def format_dims(dims) -> str:
    return "x".join(str(d) for d in dims)


def write_sweep_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_CSV_HEADER)
        for r in records:
            writer.writerow(
                [
                    format_dims(r.dims),
                    r.boundary,
                    r.method,
                    repr(r.threshold),
                    r.term_count,
                    r.pair_count,
                    repr(r.tvd),
                    repr(r.raw_norm),
                    f"{r.decompose_s:.6f}",
                    f"{r.simulate_s:.6f}",
                    f"{r.stitch_s:.6f}",
                    r.memory.full_bytes,
                    r.memory.fragment_bytes,
                    r.threads,
                ]
            )


def write_speedup_csv(reports: list[SpeedupReport], path) -> None:
    """Raw per-repetition rows per config, each followed by a mean summary row."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dims", "boundary", *SPEEDUP_CSV_HEADER])
        for rep in reports:
            dims = format_dims(rep.dims)
            for i, (u, c) in enumerate(zip(rep.uncut_s, rep.cut_s)):
                writer.writerow(
                    [dims, rep.boundary, i, f"{u:.6f}", f"{c:.6f}", f"{u / c:.4f}"]
                )
            mean_u = sum(rep.uncut_s) / len(rep.uncut_s)
            mean_c = sum(rep.cut_s) / len(rep.cut_s)
            writer.writerow(
                [
                    dims,
                    rep.boundary,
                    "mean",
                    f"{mean_u:.6f}",
                    f"{mean_c:.6f}",
                    f"{rep.speedup:.4f}",
                ]
            )
