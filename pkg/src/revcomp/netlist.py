"""Line-oriented text formats.

Netlist (``#`` starts a comment, keywords case-insensitive)::

    width 7
    input 0 I1
    const 5 0
    apply INV0 0 1 2 5
    output 0 SUM
    garbage 2

``width`` must be the first record.  Line-classification problems
(duplicates, unclassified lines, out-of-range indices) are not syntax
errors; they surface through :func:`revcomp.circuit.validate`.

Decomposition::

    width 3
    cv 1 2          # control first, then target
    cnot 0 1
    cvdag 1 2
    x 2

Gate table, one gate per record::

    gate NAME WIDTH W0,W1,...  QC ALPHA BETA DELTA [TRANSISTORS]

with the ``2**WIDTH`` output words in hexadecimal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .circuit import (
    Circuit,
    ConstantInput,
    Garbage,
    GateApplication,
    PrimaryInput,
    PrimaryOutput,
)
from .errors import DuplicateGate, MissingWidth, NetlistSyntaxError, RevcompError, UnknownGate
from .gates import CostVector, GateRegistry, GateSpec, gate_from_truth_table
from .quantum import PrimitiveKind, PrimitiveSequence, QuantumPrimitive

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_registry = GateRegistry()


@dataclass(frozen=True)
class Token:
    text: str
    column: int


def _lines(text: str) -> Iterable[Tuple[int, List[Token]]]:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    for lineno, raw in enumerate(text.split("\n"), start=1):
        for col, ch in enumerate(raw, start=1):
            if not (" " <= ch <= "~" or ch == "\t"):
                raise NetlistSyntaxError(f"non-printable or non-ASCII character {ch!r}", lineno, col)
        body = raw.split("#", 1)[0]
        tokens = [Token(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if tokens:
            yield lineno, tokens


def _int(tok: Token, lineno: int, what: str) -> int:
    if not tok.text.isdigit():
        raise NetlistSyntaxError(f"expected {what}, got {tok.text!r}", lineno, tok.column)
    return int(tok.text)


def _name(tok: Token, lineno: int) -> str:
    if not _NAME_RE.match(tok.text):
        raise NetlistSyntaxError(f"bad name {tok.text!r}", lineno, tok.column)
    return tok.text.upper()


def _arity(tokens: List[Token], n: int, lineno: int, usage: str) -> None:
    if len(tokens) != n:
        col = tokens[n].column if len(tokens) > n else tokens[-1].column + len(tokens[-1].text)
        raise NetlistSyntaxError(f"expected `{usage}`", lineno, col)


@dataclass(frozen=True)
class NetlistDocument:
    """A parsed netlist: the circuit plus the source line of each record."""

    circuit: Circuit
    width_line: int
    input_lines: Tuple[int, ...]
    output_lines: Tuple[int, ...]
    gate_lines: Tuple[int, ...]

    def source_of_gate(self, index: int) -> int:
        return self.gate_lines[index]


def parse(text: str, registry: Optional[GateRegistry] = None) -> NetlistDocument:
    registry = registry or _registry
    width: Optional[int] = None
    width_line = 0
    inputs, outputs, gates = [], [], []
    in_src, out_src, gate_src = [], [], []

    for lineno, tokens in _lines(text):
        kw = tokens[0].text.lower()
        if width is None:
            if kw != "width":
                raise MissingWidth("first record must be `width <N>`", lineno, tokens[0].column)
            _arity(tokens, 2, lineno, "width <N>")
            width = _int(tokens[1], lineno, "line count")
            width_line = lineno
            continue
        if kw == "width":
            raise NetlistSyntaxError("duplicate width record", lineno, tokens[0].column)
        elif kw == "input":
            _arity(tokens, 3, lineno, "input <idx> <NAME>")
            inputs.append((_int(tokens[1], lineno, "line index"), PrimaryInput(_name(tokens[2], lineno))))
            in_src.append(lineno)
        elif kw == "const":
            _arity(tokens, 3, lineno, "const <idx> <0|1>")
            if tokens[2].text not in ("0", "1"):
                raise NetlistSyntaxError("constant must be 0 or 1", lineno, tokens[2].column)
            inputs.append((_int(tokens[1], lineno, "line index"), ConstantInput(int(tokens[2].text))))
            in_src.append(lineno)
        elif kw == "output":
            _arity(tokens, 3, lineno, "output <idx> <NAME>")
            outputs.append((_int(tokens[1], lineno, "line index"), PrimaryOutput(_name(tokens[2], lineno))))
            out_src.append(lineno)
        elif kw == "garbage":
            _arity(tokens, 2, lineno, "garbage <idx>")
            outputs.append((_int(tokens[1], lineno, "line index"), Garbage()))
            out_src.append(lineno)
        elif kw == "apply":
            if len(tokens) < 3:
                raise NetlistSyntaxError("expected `apply <GATE> <idx...>`", lineno, tokens[0].column)
            try:
                gate = registry.get(tokens[1].text)
            except UnknownGate:
                raise NetlistSyntaxError(f"unknown gate {tokens[1].text!r}", lineno, tokens[1].column) from None
            lines = tuple(_int(t, lineno, "line index") for t in tokens[2:])
            gates.append(GateApplication(gate, lines))
            gate_src.append(lineno)
        else:
            raise NetlistSyntaxError(f"unknown keyword {tokens[0].text!r}", lineno, tokens[0].column)

    if width is None:
        raise MissingWidth("empty netlist: `width <N>` is required", 1, 1)
    circuit = Circuit(width, tuple(inputs), tuple(outputs), tuple(gates))
    return NetlistDocument(circuit, width_line, tuple(in_src), tuple(out_src), tuple(gate_src))


def emit(c: Circuit) -> str:
    """Canonical, byte-deterministic netlist text for ``c``."""
    out = [f"width {c.width}"]
    out += [f"input {line} {name.upper()}" for line, name in c.primary_inputs]
    out += [f"const {line} {value}" for line, value in c.constants]
    for app in c.gates:
        out.append(" ".join(["apply", app.gate.name.upper(), *map(str, app.lines)]))
    out += [f"output {line} {name.upper()}" for line, name in c.primary_outputs]
    out += [f"garbage {line}" for line in c.garbage_lines]
    return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> PrimitiveSequence:
    width: Optional[int] = None
    steps: List[QuantumPrimitive] = []
    for lineno, tokens in _lines(text):
        kw = tokens[0].text.lower()
        if width is None:
            if kw != "width":
                raise MissingWidth("first record must be `width <N>`", lineno, tokens[0].column)
            _arity(tokens, 2, lineno, "width <N>")
            width = _int(tokens[1], lineno, "line count")
            continue
        if kw == "x":
            _arity(tokens, 2, lineno, "x <target>")
            steps.append(QuantumPrimitive(PrimitiveKind.X, _int(tokens[1], lineno, "line index")))
        elif kw in ("cnot", "cv", "cvdag"):
            _arity(tokens, 3, lineno, f"{kw} <control> <target>")
            control = _int(tokens[1], lineno, "line index")
            target = _int(tokens[2], lineno, "line index")
            if control == target:
                raise NetlistSyntaxError("control and target must differ", lineno, tokens[2].column)
            steps.append(QuantumPrimitive(PrimitiveKind(kw), target, control))
        else:
            raise NetlistSyntaxError(f"unknown primitive {tokens[0].text!r}", lineno, tokens[0].column)
    if width is None:
        raise MissingWidth("empty decomposition: `width <N>` is required", 1, 1)
    return PrimitiveSequence(width, tuple(steps))


def emit_decomposition(seq: PrimitiveSequence) -> str:
    out = [f"width {seq.width}"]
    for step in seq.steps:
        out.append(" ".join([step.kind.value, *map(str, step.lines())]))
    return "\n".join(out) + "\n"


def parse_gate_table(text: str) -> List[GateSpec]:
    gates: List[GateSpec] = []
    for lineno, tokens in _lines(text):
        if tokens[0].text.lower() != "gate":
            raise NetlistSyntaxError(f"expected `gate`, got {tokens[0].text!r}", lineno, tokens[0].column)
        if len(tokens) not in (8, 9):
            raise NetlistSyntaxError(
                "expected `gate NAME WIDTH WORDS QC ALPHA BETA DELTA [TRANSISTORS]`", lineno, tokens[0].column)
        name = _name(tokens[1], lineno)
        width = _int(tokens[2], lineno, "gate width")
        try:
            rows = [int(w, 16) for w in tokens[3].text.split(",")]
        except ValueError:
            raise NetlistSyntaxError("output words must be comma-separated hexadecimal", lineno, tokens[3].column) from None
        qc, alpha, beta, delta = (_int(t, lineno, "non-negative integer") for t in tokens[4:8])
        transistors = _int(tokens[8], lineno, "transistor count") if len(tokens) == 9 else None
        try:
            gates.append(gate_from_truth_table(name, width, rows, qc, CostVector(alpha, beta, delta), transistors))
        except RevcompError as exc:
            raise NetlistSyntaxError(str(exc), lineno, tokens[3].column) from exc
    return gates


def emit_gate_table(gates: Iterable[GateSpec]) -> str:
    out = []
    for g in gates:
        words = ",".join(format(w, "x") for w in g.table.mapping)
        lc = g.logic_cost
        rec = f"gate {g.name} {g.width} {words} {g.quantum_cost} {lc.alpha} {lc.beta} {lc.delta}"
        if g.transistor_count is not None:
            rec += f" {g.transistor_count}"
        out.append(rec)
    return "".join(r + "\n" for r in out)


def load_registry(text: str, registry: Optional[GateRegistry] = None) -> GateRegistry:
    """Register every gate of a gate table.

    Records naming a builtin gate update that gate's cost metadata only, and
    only if the table matches the builtin's.
    """
    registry = registry or GateRegistry()
    for g in parse_gate_table(text):
        if g.name in registry:
            existing = registry.get(g.name)
            if existing.table != g.table:
                raise DuplicateGate(f"gate {g.name} is already defined with a different truth table")
            registry.configure(g.name, quantum_cost=g.quantum_cost, logic_cost=g.logic_cost,
                               transistor_count=g.transistor_count)
        else:
            registry.register(g)
    return registry
