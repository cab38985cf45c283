"""Command-line interface.

Subcommands: decompose, cut, simulate, bench {sweep, speedup, memory}.
Exit codes: 0 success, 2 validation error, 1 internal error.  Relative output
paths are resolved against $QUDITCUT_OUTDIR when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import bench as bench_mod
from . import io as io_mod
from .cutting import execute_cut, plan_cut, reconstruct_probabilities
from .decompose import decompose_csum
from .plotting import plot_speedup, plot_sweep
from .schmidt import operator_schmidt
from .simulator import run


def _out_path(path: str) -> Path:
    base = os.environ.get("QUDITCUT_OUTDIR")
    p = Path(path)
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def _emit_json(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if out:
        path = _out_path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
    else:
        print(text)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.split(",") if x)
    except ValueError as exc:
        raise ValueError(f"bad dimension list {text!r}") from exc
    if not dims:
        raise ValueError(f"bad dimension list {text!r}")
    return dims


def _load_bench_circuit(args):
    if getattr(args, "circuit", None):
        circuit = io_mod.load_circuit(args.circuit)
        circuit, order = io_mod.ensure_adjacent_layout(circuit)
        if order != tuple(range(len(order))):
            print(f"note: relabeled wires to order {list(order)}", file=sys.stderr)
        return circuit
    if getattr(args, "dims", None):
        dims = _parse_dims(args.dims[0] if isinstance(args.dims, list) else args.dims)
        return bench_mod.dummy_circuit(dims)
    raise ValueError("provide --circuit or --dims")


def _schmidt_residual(dec, target) -> float:
    acc = np.zeros_like(target)
    for _, a, b in dec.local_terms():
        acc += np.kron(a, b)
    return float(np.linalg.norm(acc - target))


def _cmd_decompose(args) -> int:
    if args.gate == "csum":
        if args.d1 is None or args.d2 is None:
            raise ValueError("--gate csum requires --d1 and --d2")
        if args.d1 < 2 or args.d2 < 2:
            raise ValueError("dimension must be >= 2")
        if args.method == "gellmann":
            dec = decompose_csum(args.d1, args.d2, args.threshold)
            doc = io_mod.decomposition_to_dict(dec)
            terms = dec.term_count
            residual = dec.residual
            max_coeff = max((abs(t.coeff) for t in dec.terms), default=0.0)
        else:
            from .gates import csum

            target = csum(args.d1, args.d2)
            tol = args.threshold if args.threshold > 0 else None
            dec = operator_schmidt(target, args.d1, args.d2, tol)
            doc = io_mod.schmidt_to_dict(dec)
            terms = dec.term_count
            residual = _schmidt_residual(dec, target)
            max_coeff = max(dec.sigmas, default=0.0)
    else:
        if not args.file:
            raise ValueError("--gate file requires --file")
        if args.method != "schmidt":
            raise ValueError("--gate file requires --method schmidt")
        with open(args.file) as fh:
            spec = json.load(fh)
        d1, d2 = int(spec["d1"]), int(spec["d2"])
        matrix = io_mod.matrix_from_pairs(spec["matrix"], d1 * d2)
        tol = args.threshold if args.threshold > 0 else None
        dec = operator_schmidt(matrix, d1, d2, tol)
        doc = io_mod.schmidt_to_dict(dec)
        terms = dec.term_count
        residual = _schmidt_residual(dec, matrix)
        max_coeff = max(dec.sigmas, default=0.0)

    summary = f"terms: {terms}  residual: {residual:.3e}  max|coeff|: {max_coeff:.6f}"
    if args.out:
        _emit_json(doc, args.out)
        print(summary)
    else:
        print(summary, file=sys.stderr)
        _emit_json(doc, None)
    return 0


def _cmd_cut(args) -> int:
    circuit = io_mod.load_circuit(args.circuit)
    circuit, order = io_mod.ensure_adjacent_layout(circuit)
    spec = io_mod.logical_label_spec(circuit.dims, order)
    if order != tuple(range(len(order))):
        print(f"note: relabeled wires to order {list(order)}", file=sys.stderr)
    plan = plan_cut(circuit, args.boundary, args.method, args.threshold)
    result = execute_cut(
        circuit,
        plan,
        threads=args.threads,
        compare_uncut=(args.reference == "uncut"),
        logical_spec=spec,
    )
    _emit_json(io_mod.stitched_to_dict(result), args.out)
    return 0


def _cmd_simulate(args) -> int:
    circuit = io_mod.load_circuit(args.circuit)
    circuit, order = io_mod.ensure_adjacent_layout(circuit)
    spec = io_mod.logical_label_spec(circuit.dims, order)
    if order != tuple(range(len(order))):
        print(f"note: relabeled wires to order {list(order)}", file=sys.stderr)
    probs, norm = reconstruct_probabilities(run(circuit), spec)
    _emit_json(
        {"dims": list(circuit.dims), "norm": norm, "probabilities": probs},
        args.out,
    )
    return 0


def _cmd_bench_memory(args) -> int:
    est = bench_mod.estimate_memory(_parse_dims(args.dims), args.cut, args.bytes)
    line = f"full: {est.full_bytes} B; fragments: {est.fragment_bytes} B"
    print(line)
    if args.pairs is not None:
        print(
            f"working set ({args.pairs} pairs): "
            f"{est.working_set_bytes(args.pairs)} B"
        )
    return 0


def _cmd_bench_sweep(args) -> int:
    circuit = _load_bench_circuit(args)
    boundary = args.boundary if args.boundary is not None else circuit.n_qudits // 2
    thresholds = [float(x) for x in args.thresholds.split(",") if x]
    if not thresholds:
        raise ValueError("provide at least one threshold")
    records = bench_mod.truncation_sweep(
        circuit, boundary, args.method, thresholds, threads=args.threads
    )
    csv_path = _out_path(args.csv)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    bench_mod.write_sweep_csv(records, csv_path)
    print(f"wrote {len(records)} records to {csv_path}")
    if args.plot:
        plot_path = _out_path(args.plot)
        plot_path.parent.mkdir(parents=True, exist_ok=True)
        plot_sweep(records, plot_path)
        print(f"wrote plot to {plot_path}")
    return 0


def _cmd_bench_speedup(args) -> int:
    if args.circuit and args.dims:
        raise ValueError("provide either --circuit or --dims, not both")
    reports = []
    if args.circuit:
        circuit = io_mod.load_circuit(args.circuit)
        circuit, _ = io_mod.ensure_adjacent_layout(circuit)
        boundary = (
            args.boundary if args.boundary is not None else circuit.n_qudits // 2
        )
        reports.append(
            bench_mod.speedup_report(circuit, boundary, args.reps, args.threads)
        )
    elif args.dims:
        for dims_text in args.dims:
            dims = _parse_dims(dims_text)
            circuit = bench_mod.dummy_circuit(dims)
            boundary = (
                args.boundary if args.boundary is not None else len(dims) // 2
            )
            reports.append(
                bench_mod.speedup_report(circuit, boundary, args.reps, args.threads)
            )
    else:
        raise ValueError("provide --circuit or --dims")

    csv_path = _out_path(args.csv)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    bench_mod.write_speedup_csv(reports, csv_path)
    for rep in reports:
        print(
            f"dims {bench_mod.format_dims(rep.dims)}: {rep.pair_count} pairs, "
            f"speedup {rep.speedup:.3f}x over {len(rep.uncut_s)} runs"
        )
    print(f"wrote raw times to {csv_path}")
    if args.plot:
        plot_path = _out_path(args.plot)
        plot_path.parent.mkdir(parents=True, exist_ok=True)
        plot_speedup(reports, plot_path)
        print(f"wrote plot to {plot_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditcut",
        description="Mixed-dimensional qudit circuit cutting and simulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a two-qudit gate")
    p.add_argument("--gate", choices=("csum", "file"), default="csum")
    p.add_argument("--d1", type=int, help="control dimension")
    p.add_argument("--d2", type=int, help="target dimension")
    p.add_argument("--file", help="JSON gate file (for --gate file)")
    p.add_argument("--method", choices=("gellmann", "schmidt"), default="gellmann")
    p.add_argument("--threshold", type=float, default=0.0)
    p.add_argument("--out", help="recipe JSON output path")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("cut", help="cut, execute and stitch a circuit")
    p.add_argument("--circuit", required=True)
    p.add_argument("--boundary", type=int, required=True)
    p.add_argument("--method", choices=("gellmann", "schmidt"), default="gellmann")
    p.add_argument("--threshold", type=float, default=0.0)
    p.add_argument("--reference", choices=("uncut", "none"), default="uncut")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="result JSON output path")
    p.set_defaults(func=_cmd_cut)

    p = sub.add_parser("simulate", help="run a circuit uncut")
    p.add_argument("--circuit", required=True)
    p.add_argument("--out", help="result JSON output path")
    p.set_defaults(func=_cmd_simulate)

    bench = sub.add_parser("bench", help="benchmarks and accounting")
    bsub = bench.add_subparsers(dest="bench_command", required=True)

    p = bsub.add_parser("memory", help="statevector memory accounting")
    p.add_argument("--dims", required=True, help="comma-separated dimensions")
    p.add_argument("--cut", type=int, default=None)
    p.add_argument("--bytes", type=int, default=8, choices=(8, 16))
    p.add_argument("--pairs", type=int, default=None)
    p.set_defaults(func=_cmd_bench_memory)

    p = bsub.add_parser("sweep", help="truncation threshold sweep")
    p.add_argument("--circuit")
    p.add_argument("--dims", help="build the layered test circuit on these dims")
    p.add_argument("--boundary", type=int, default=None)
    p.add_argument("--method", choices=("gellmann", "schmidt"), default="gellmann")
    p.add_argument("--thresholds", required=True, help="comma-separated taus")
    p.add_argument("--csv", required=True)
    p.add_argument("--plot", help="optional figure path (svg/png)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_bench_sweep)

    p = bsub.add_parser("speedup", help="uncut vs Schmidt-cut timing")
    p.add_argument("--circuit")
    p.add_argument(
        "--dims",
        action="append",
        help="layered test circuit dims; repeat for a dimension sweep",
    )
    p.add_argument("--boundary", type=int, default=None)
    p.add_argument("--reps", type=int, default=12)
    p.add_argument("--csv", required=True)
    p.add_argument("--plot", help="optional figure path (svg/png)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_bench_speedup)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failures
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
