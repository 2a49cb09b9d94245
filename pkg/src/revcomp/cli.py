"""Command-line driver: ``revcomp <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Dict, Optional, Sequence

from . import circuit as cc
from .compressor import build_compressor, format_lemma_report, lemma_report, verify_compressor
from .errors import RevcompError, WidthTooLarge
from .gates import INPUT_PORT_NAMES, OUTPUT_PORT_NAMES, GateRegistry, word_to_bits
from .netlist import emit, emit_gate_table, load_registry, parse, parse_decomposition
from .quantum import DEFAULT_TOL, quantum_cost, verify_decomposition
from .report import comparison_rows, format_csv, format_markdown

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _registry(args) -> GateRegistry:
    if getattr(args, "gates", None):
        return load_registry(_read(args.gates))
    return GateRegistry()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _circuit(args) -> cc.Circuit:
    return parse(_read(args.file), _registry(args)).circuit


def _parse_assignment(spec: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for item in filter(None, (s.strip() for s in spec.split(","))):
        name, sep, bit = item.partition("=")
        if not sep or bit.strip() not in ("0", "1") or not name.strip():
            raise UsageError(f"bad input assignment {item!r}; expected NAME=0 or NAME=1")
        out[name.strip().upper()] = int(bit)
    return out


def cmd_truth(args, out) -> int:
    g = _registry(args).get(args.gate)
    w = g.width
    out.write(" ".join(INPUT_PORT_NAMES[:w]) + " | " + " ".join(OUTPUT_PORT_NAMES[:w]) + "\n")
    for x in range(1 << w):
        ins = " ".join(map(str, word_to_bits(x, w)))
        outs = " ".join(map(str, word_to_bits(g(x), w)))
        out.write(f"{ins} | {outs}\n")
    return EXIT_OK


def cmd_sim(args, out) -> int:
    c = _circuit(args)
    result = cc.simulate(c, _parse_assignment(args.inputs))
    for name, bit in result.outputs.items():
        out.write(f"{name}={bit}\n")
    if args.garbage:
        for line, bit in result.garbage.items():
            out.write(f"~{line}={bit}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        c = _circuit(args)
    except RevcompError as exc:
        out.write(f"FAIL parse: {exc}\n")
        return EXIT_FAIL
    diags = cc.validate(c)
    for d in diags:
        out.write(f"FAIL {d}\n")
    if diags:
        return EXIT_FAIL
    try:
        perm = cc.full_permutation(c)
    except WidthTooLarge as exc:
        out.write(f"FAIL {exc}\n")
        return EXIT_FAIL
    out.write(f"OK valid, bijective on {len(perm)} words\n")
    return EXIT_OK


def cmd_metrics(args, out) -> int:
    out.write(f"{cc.metrics(_circuit(args))}\n")
    return EXIT_OK


def cmd_synth(args, out) -> int:
    text = emit(build_compressor(args.n))
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="ascii")
    else:
        out.write(text)
    return EXIT_OK


def cmd_check_compressor(args, out) -> int:
    check = verify_compressor(_circuit(args), args.n)
    if check.ok:
        out.write(f"OK {args.n}:2 identity holds on all {check.checked} assignments\n")
        return EXIT_OK
    cex = ",".join(f"{k}={v}" for k, v in check.counterexample.items())
    out.write(f"FAIL {cex}: inputs sum to {check.expected_total}, outputs weigh {check.observed_total}\n")
    return EXIT_FAIL


def cmd_qcheck(args, out) -> int:
    g = _registry(args).get(args.gate)
    seq = parse_decomposition(_read(args.decomp))
    check = verify_decomposition(seq, g, args.tol)
    cost = quantum_cost(seq)
    if check.ok:
        phase = check.global_phase if check.global_phase is not None else 1
        out.write(f"OK {g.name} realised, cost {cost} (declared {g.quantum_cost}), global phase {phase:.6g}\n")
        return EXIT_OK
    out.write(f"FAIL {g.name}: {check.reason}\n")
    return EXIT_FAIL


def cmd_compare(args, out) -> int:
    if args.netlist:
        proposed = parse(_read(args.netlist), _registry(args)).circuit
    else:
        proposed = build_compressor(args.n)
    rows = comparison_rows(proposed, args.n)
    out.write(format_csv(rows) if args.format == "csv" else format_markdown(rows, args.n))
    return EXIT_OK


def cmd_lemmas(args, out) -> int:
    rows = lemma_report(args.lo, args.hi)
    out.write(format_lemma_report(rows) + "\n")
    return EXIT_OK if all(r.all_match for r in rows) else EXIT_FAIL


def cmd_gates(args, out) -> int:
    out.write(emit_gate_table(_registry(args)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revcomp", description="Reversible gate and compressor toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def with_gates(sp):
        sp.add_argument("--gates", metavar="FILE", help="extra gate table to load")
        return sp

    sp = with_gates(sub.add_parser("truth", help="print a gate's truth table"))
    sp.add_argument("gate")
    sp.set_defaults(func=cmd_truth)

    sp = with_gates(sub.add_parser("sim", help="simulate one input assignment"))
    sp.add_argument("file")
    sp.add_argument("--in", dest="inputs", required=True, metavar="NAME=bit,...")
    sp.add_argument("--garbage", action="store_true", help="also print garbage lines")
    sp.set_defaults(func=cmd_sim)

    sp = with_gates(sub.add_parser("verify", help="validate a netlist and check bijectivity"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify)

    sp = with_gates(sub.add_parser("metrics", help="print circuit metrics"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_metrics)

    sp = sub.add_parser("synth", help="generate a circuit")
    sp.add_argument("kind", choices=["compressor"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("-o", "--output", metavar="FILE")
    sp.set_defaults(func=cmd_synth)

    sp = with_gates(sub.add_parser("check-compressor", help="exhaustive n:2 arithmetic check"))
    sp.add_argument("file")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_check_compressor)

    sp = with_gates(sub.add_parser("qcheck", help="verify a primitive decomposition of a gate"))
    sp.add_argument("gate")
    sp.add_argument("--decomp", required=True, metavar="FILE")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.set_defaults(func=cmd_qcheck)

    sp = with_gates(sub.add_parser("compare", help="comparison table against published designs"))
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--format", choices=["md", "csv"], default="md")
    sp.add_argument("--netlist", metavar="FILE", help="measure this netlist instead of the generated one")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("lemmas", help="predicted vs measured compressor metrics")
    sp.add_argument("--lo", type=int, default=4)
    sp.add_argument("--hi", type=int, default=12)
    sp.set_defaults(func=cmd_lemmas)

    sp = with_gates(sub.add_parser("gates", help="export the gate registry as a gate table"))
    sp.set_defaults(func=cmd_gates)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, RevcompError) as exc:
        err.write(f"revcomp {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
