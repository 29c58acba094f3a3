"""Command-line front end.

Subcommands: `grover run`, `grover scan`, `classical`, and
`circuit verify|run|invert`. Exit codes: 0 success, 2 usage or validation
error, 3 resource cap exceeded. The GROVERSIM_MAX_QUBITS environment
variable overrides the default qubit cap. Identical flags and seed always
produce byte-identical stdout.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .documents import (
    TraceDocument,
    parse_circuit_document,
    render_circuit_document,
    render_trace_document,
)
from .grover import (
    GroverConfig,
    Oracle,
    classical_baseline,
    run_grover,
    scan_probabilities,
    success_probability,
)
from .reversible import (
    ReversibleCircuit,
    check_bijection,
    index_to_bits,
    inverse_circuit,
    run_circuit,
)
from .state import DEFAULT_MAX_QUBITS, ResourceLimitError


def _qubit_cap() -> int:
    raw = os.environ.get("GROVERSIM_MAX_QUBITS")
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"GROVERSIM_MAX_QUBITS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"GROVERSIM_MAX_QUBITS must be >= 1, got {cap}")
    return cap


def _marked_arg(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _iterations_arg(text: str):
    if text == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


def _parse_bitstring(text: str) -> list[int]:
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"input must be a non-empty string of 0s and 1s, got {text!r}")
    return [int(ch) for ch in text]


def _load_circuit(path: str) -> ReversibleCircuit:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read circuit document {path!r}: {exc}") from None
    return parse_circuit_document(text)


def cmd_grover_run(args: argparse.Namespace) -> int:
    oracle = Oracle(args.qubits, marked=args.marked)
    config = GroverConfig(
        n=args.qubits,
        oracle=oracle,
        iterations=args.iterations,
        seed=args.seed,
        trace_every_step=args.trace is not None,
        max_qubits=_qubit_cap(),
    )
    trace = run_grover(config)
    if trace.degenerate:
        print(
            "note: at least half the space is marked; the auto iteration count is degenerate",
            file=sys.stderr,
        )
    prob = success_probability(trace.final_state, oracle)
    if args.format == "json":
        print(
            f'{{"iterations":{trace.iterations},"outcome":{trace.outcome},'
            f'"success_probability":{prob!r},"oracle_evals":{trace.oracle_evals}}}'
        )
    else:
        print(f"iterations: {trace.iterations}")
        print(f"outcome: {trace.outcome}")
        print(f"success_probability: {prob!r}")
        print(f"oracle_evals: {trace.oracle_evals}")
    if args.trace is not None:
        doc = TraceDocument.from_trace(trace)
        Path(args.trace).write_text(render_trace_document(doc), encoding="utf-8")
    return 0


def cmd_grover_scan(args: argparse.Namespace) -> int:
    oracle = Oracle(args.qubits, marked=args.marked)
    config = GroverConfig(n=args.qubits, oracle=oracle, max_qubits=_qubit_cap())
    series = scan_probabilities(config, args.max_iterations)
    lines = ["t,success_probability"]
    lines.extend(f"{t},{format(p, '.15g')}" for t, p in series)
    print("\n".join(lines))
    return 0


def cmd_classical(args: argparse.Namespace) -> int:
    result = classical_baseline(args.size, args.marked, args.iterations, args.trials, args.seed)
    print(f"empirical: {result.empirical!r}")
    print(f"analytic: {result.analytic!r}")
    return 0


def cmd_circuit_verify(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.path)
    cap = _qubit_cap()
    if circuit.wires > cap:
        raise ResourceLimitError(
            f"verifying a {circuit.wires}-wire circuit enumerates 2**{circuit.wires} inputs; cap is {cap}"
        )
    table = [run_circuit(circuit, index_to_bits(x, circuit.wires)) for x in range(1 << circuit.wires)]
    verdict = "true" if check_bijection(table) else "false"
    print(f"reversible: {verdict}")
    return 0


def cmd_circuit_run(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.path)
    bits = _parse_bitstring(args.input)
    out = run_circuit(circuit, bits)
    print("".join(str(b) for b in out))
    return 0


def cmd_circuit_invert(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.path)
    text = render_circuit_document(inverse_circuit(circuit))
    if args.output is not None:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groversim",
        description="State-vector search simulator and reversible-circuit tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    grover = sub.add_parser("grover", help="quantum search commands")
    gsub = grover.add_subparsers(dest="grover_command", required=True)

    run_p = gsub.add_parser("run", help="run the search once and measure")
    run_p.add_argument("--qubits", type=int, required=True, metavar="N",
                       help="register width; the search space has 2**N states")
    run_p.add_argument("--marked", type=_marked_arg, required=True, metavar="R[,R...]",
                       help="comma-separated marked basis indices")
    run_p.add_argument("--iterations", type=_iterations_arg, default="auto", metavar="T",
                       help="iteration count or 'auto' for the optimum (default: auto)")
    run_p.add_argument("--seed", type=int, default=0, metavar="S",
                       help="measurement seed (default: 0)")
    run_p.add_argument("--trace", metavar="PATH",
                       help="also write a step-by-step trace document to PATH")
    run_p.add_argument("--format", choices=("text", "json"), default="text",
                       help="stdout format (default: text)")
    run_p.set_defaults(handler=cmd_grover_run)

    scan_p = gsub.add_parser("scan", help="tabulate success probability against iteration count")
    scan_p.add_argument("--qubits", type=int, required=True, metavar="N",
                        help="register width; the search space has 2**N states")
    scan_p.add_argument("--marked", type=_marked_arg, required=True, metavar="R[,R...]",
                        help="comma-separated marked basis indices")
    scan_p.add_argument("--max-iterations", type=int, required=True, metavar="T",
                        help="scan t = 0..T (T >= 1)")
    scan_p.add_argument("--format", choices=("csv",), default="csv",
                        help="output format (default: csv)")
    scan_p.set_defaults(handler=cmd_grover_scan)

    classical_p = sub.add_parser("classical", help="random-guess baseline for the same search")
    classical_p.add_argument("--size", type=int, required=True, metavar="N",
                             help="number of states searched")
    classical_p.add_argument("--marked", type=_marked_arg, default=frozenset({0}), metavar="R[,R...]",
                             help="comma-separated marked indices (default: 0)")
    classical_p.add_argument("--iterations", type=int, required=True, metavar="K",
                             help="uniform draws per trial")
    classical_p.add_argument("--trials", type=int, default=100000, metavar="M",
                             help="Monte Carlo trials (default: 100000)")
    classical_p.add_argument("--seed", type=int, default=0, metavar="S",
                             help="sampling seed (default: 0)")
    classical_p.set_defaults(handler=cmd_classical)

    circuit = sub.add_parser("circuit", help="reversible-circuit tools")
    csub = circuit.add_subparsers(dest="circuit_command", required=True)

    verify_p = csub.add_parser("verify", help="exhaustively check a circuit document for reversibility")
    verify_p.add_argument("path", help="circuit document (JSON)")
    verify_p.set_defaults(handler=cmd_circuit_verify)

    crun_p = csub.add_parser("run", help="run a circuit document on a classical input")
    crun_p.add_argument("path", help="circuit document (JSON)")
    crun_p.add_argument("--input", required=True, metavar="BITS",
                        help="bit string; the leftmost character is wire 0")
    crun_p.set_defaults(handler=cmd_circuit_run)

    invert_p = csub.add_parser("invert", help="emit the inverse circuit document")
    invert_p.add_argument("path", help="circuit document (JSON)")
    invert_p.add_argument("--output", metavar="PATH",
                          help="write here instead of stdout")
    invert_p.set_defaults(handler=cmd_circuit_invert)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
