"""Circuit IR: a cascade of gate applications over classified lines.

Line ``i`` of a circuit is bit ``width - 1 - i`` of a circuit word, so line 0
is the most significant bit, the same convention gates use for their ports.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import BadArity, InvalidCircuit, MissingInput, UnknownInput, WidthTooLarge
from .gates import ZERO_COST, CostVector, GateSpec, TruthTable, inverse_gate

MAX_EXHAUSTIVE_WIDTH = 20
# Batch size for vectorised enumeration; bounds peak memory.
CHUNK_BITS = 20


@dataclass(frozen=True)
class PrimaryInput:
    name: str

    def __post_init__(self):
        object.__setattr__(self, "name", self.name.upper())


@dataclass(frozen=True)
class ConstantInput:
    value: int


@dataclass(frozen=True)
class PrimaryOutput:
    name: str

    def __post_init__(self):
        object.__setattr__(self, "name", self.name.upper())


@dataclass(frozen=True)
class Garbage:
    pass


InputClass = Union[PrimaryInput, ConstantInput]
OutputClass = Union[PrimaryOutput, Garbage]


@dataclass(frozen=True)
class GateApplication:
    """``gate`` applied to ``lines``; ``lines[k]`` binds gate port ``k``."""

    gate: GateSpec
    lines: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))


@dataclass(frozen=True)
class Circuit:
    """Ordered cascade of gate applications.

    ``inputs`` and ``outputs`` are sequences of ``(line, classification)``
    pairs, stored sorted by line.  Duplicates are kept so that
    :func:`validate` can report malformed documents instead of the
    constructor rejecting them.
    """

    width: int
    inputs: Tuple[Tuple[int, InputClass], ...] = ()
    outputs: Tuple[Tuple[int, OutputClass], ...] = ()
    gates: Tuple[GateApplication, ...] = ()

    def __post_init__(self):
        by_line = lambda entry: entry[0]
        object.__setattr__(self, "inputs", tuple(sorted(((int(l), c) for l, c in self.inputs), key=by_line)))
        object.__setattr__(self, "outputs", tuple(sorted(((int(l), c) for l, c in self.outputs), key=by_line)))
        object.__setattr__(self, "gates", tuple(self.gates))

    def input_class(self, line: int) -> InputClass:
        return dict(self.inputs)[line]

    def output_class(self, line: int) -> OutputClass:
        return dict(self.outputs)[line]

    @property
    def primary_inputs(self) -> List[Tuple[int, str]]:
        """``(line, name)`` for each primary input, in line order."""
        return sorted((l, c.name) for l, c in self.inputs if isinstance(c, PrimaryInput))

    @property
    def constants(self) -> List[Tuple[int, int]]:
        return sorted((l, c.value) for l, c in self.inputs if isinstance(c, ConstantInput))

    @property
    def primary_outputs(self) -> List[Tuple[int, str]]:
        return sorted((l, c.name) for l, c in self.outputs if isinstance(c, PrimaryOutput))

    @property
    def garbage_lines(self) -> List[int]:
        return sorted(l for l, c in self.outputs if isinstance(c, Garbage))

    def with_gates(self, gates: Iterable[GateApplication]) -> "Circuit":
        return Circuit(self.width, self.inputs, self.outputs, tuple(gates))


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    gate_index: Optional[int] = None
    line: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def validate(c: Circuit) -> List[Diagnostic]:
    """All invariant violations of ``c``; empty iff the circuit is well formed."""
    diags: List[Diagnostic] = []
    if c.width < 0:
        diags.append(Diagnostic("BadWidth", f"width must be non-negative, got {c.width}"))
        return diags

    for k, app in enumerate(c.gates):
        if len(app.lines) != app.gate.width:
            diags.append(Diagnostic(
                "BadArity",
                f"gate #{k} ({app.gate.name}) has width {app.gate.width} but binds {len(app.lines)} lines",
                gate_index=k,
            ))
        for line, count in Counter(app.lines).items():
            if count > 1:
                diags.append(Diagnostic(
                    "DuplicateLine", f"gate #{k} ({app.gate.name}) binds line {line} more than once",
                    gate_index=k, line=line,
                ))
        for line in app.lines:
            if not 0 <= line < c.width:
                diags.append(Diagnostic(
                    "OutOfRange", f"gate #{k} ({app.gate.name}) binds line {line} outside 0..{c.width - 1}",
                    gate_index=k, line=line,
                ))

    for side, entries in (("input", c.inputs), ("output", c.outputs)):
        counts = Counter(l for l, _ in entries)
        for line, count in sorted(counts.items()):
            if not 0 <= line < c.width:
                diags.append(Diagnostic("OutOfRange", f"{side} classification of line {line} outside 0..{c.width - 1}", line=line))
            elif count > 1:
                diags.append(Diagnostic("DuplicateClassification", f"line {line} has {count} {side} classifications", line=line))
        for line in range(c.width):
            if line not in counts:
                diags.append(Diagnostic("Unclassified", f"line {line} has no {side} classification", line=line))
        names = Counter(cls.name for _, cls in entries if isinstance(cls, (PrimaryInput, PrimaryOutput)))
        for name, count in sorted(names.items()):
            if count > 1:
                diags.append(Diagnostic("DuplicateName", f"{side} name {name} used {count} times"))

    for line, cls in c.inputs:
        if isinstance(cls, ConstantInput) and cls.value not in (0, 1):
            diags.append(Diagnostic("BadConstant", f"constant on line {line} must be 0 or 1", line=line))
    return diags


def _require_valid(c: Circuit) -> None:
    diags = validate(c)
    if diags:
        raise InvalidCircuit(diags)


@dataclass(frozen=True)
class SimulationResult:
    outputs: Dict[str, int]
    garbage: Dict[int, int]


def simulate(c: Circuit, assignment: Mapping[str, int]) -> SimulationResult:
    """Run one input assignment through the cascade, bit by bit."""
    _require_valid(c)
    names = {name for _, name in c.primary_inputs}
    given = {k.upper(): v for k, v in assignment.items()}
    unknown = sorted(set(given) - names)
    if unknown:
        raise UnknownInput(f"not a primary input: {', '.join(unknown)}")
    missing = sorted(names - set(given))
    if missing:
        raise MissingInput(f"no value for primary input(s): {', '.join(missing)}")

    state = [0] * c.width
    for line, cls in c.inputs:
        state[line] = (given[cls.name] if isinstance(cls, PrimaryInput) else cls.value) & 1
    for app in c.gates:
        w = app.gate.width
        word = 0
        for line in app.lines:
            word = (word << 1) | state[line]
        out = app.gate.table(word)
        for k, line in enumerate(app.lines):
            state[line] = (out >> (w - 1 - k)) & 1

    outputs: Dict[str, int] = {}
    garbage: Dict[int, int] = {}
    for line, cls in sorted(c.outputs, key=lambda e: e[0]):
        if isinstance(cls, PrimaryOutput):
            outputs[cls.name] = state[line]
        else:
            garbage[line] = state[line]
    return SimulationResult(outputs, garbage)


def run_lines(c: Circuit, state: np.ndarray) -> np.ndarray:
    """Vectorised cascade: ``state`` has shape (width, N), one row per line.

    Returns a new array of the same shape holding the final line values.
    Classifications are ignored.
    """
    state = np.array(state, dtype=np.uint8, copy=True)
    tables: Dict[int, np.ndarray] = {}
    for app in c.gates:
        w = app.gate.width
        table = tables.get(id(app.gate.table))
        if table is None:
            table = np.asarray(app.gate.table.mapping, dtype=np.int64)
            tables[id(app.gate.table)] = table
        word = np.zeros(state.shape[1], dtype=np.int64)
        for line in app.lines:
            word = (word << 1) | state[line]
        out = table[word]
        for k, line in enumerate(app.lines):
            state[line] = (out >> (w - 1 - k)) & 1
    return state


def _bits_of(words: np.ndarray, width: int) -> np.ndarray:
    """(width, N) bit matrix of ``words``; row 0 is the most significant bit."""
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)[:, None]
    return ((words[None, :] >> shifts) & 1).astype(np.uint8)


def _pack(bits: np.ndarray) -> np.ndarray:
    words = np.zeros(bits.shape[1], dtype=np.int64)
    for row in bits:
        words = (words << 1) | row
    return words


def full_permutation(c: Circuit) -> TruthTable:
    """Permutation of all ``2**width`` words realised by the gate cascade."""
    if c.width > MAX_EXHAUSTIVE_WIDTH:
        raise WidthTooLarge(f"width {c.width} exceeds exhaustive limit {MAX_EXHAUSTIVE_WIDTH}")
    for app in c.gates:
        if len(app.lines) != app.gate.width or len(set(app.lines)) != len(app.lines) \
                or any(not 0 <= l < c.width for l in app.lines):
            raise InvalidCircuit([d for d in validate(c) if d.gate_index is not None])
    if c.width < 1:
        raise BadArity("a circuit needs at least one line to have a truth table")
    words = np.arange(1 << c.width, dtype=np.int64)
    final = _pack(run_lines(c, _bits_of(words, c.width)))
    return TruthTable(c.width, tuple(final.tolist()))


def input_words(c: Circuit, assignments: np.ndarray) -> np.ndarray:
    """Initial (width, N) line state for primary-input words ``assignments``.

    Primary inputs are packed in line order, first primary input most
    significant; constants are materialised on their lines.
    """
    pis = c.primary_inputs
    n = len(pis)
    state = np.zeros((c.width, assignments.shape[0]), dtype=np.uint8)
    for k, (line, _) in enumerate(pis):
        state[line] = (assignments >> (n - 1 - k)) & 1
    for line, value in c.constants:
        state[line] = value
    return state


def iter_assignment_chunks(n_inputs: int, chunk_bits: int = CHUNK_BITS) -> Iterator[np.ndarray]:
    total = 1 << n_inputs
    step = 1 << min(chunk_bits, n_inputs)
    for start in range(0, total, step):
        yield np.arange(start, min(start + step, total), dtype=np.int64)


@dataclass(frozen=True)
class RestrictedFunction:
    """Output table of a circuit over all primary-input assignments.

    Row ``k`` corresponds to the assignment whose bits (first primary input
    most significant) spell ``k``.  Output columns are in line order;
    garbage columns are labelled ``~<line>``.
    """

    input_names: Tuple[str, ...]
    output_labels: Tuple[str, ...]
    outputs: np.ndarray = field(repr=False, compare=False)
    injective: bool = True

    def __len__(self) -> int:
        return self.outputs.shape[0]

    def row(self, assignment: Mapping[str, int]) -> Dict[str, int]:
        given = {k.upper(): v for k, v in assignment.items()}
        k = 0
        for name in self.input_names:
            k = (k << 1) | (given[name] & 1)
        return dict(zip(self.output_labels, (int(v) for v in self.outputs[k])))

    def rows(self) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        n = len(self.input_names)
        for k in range(len(self)):
            bits = tuple((k >> (n - 1 - i)) & 1 for i in range(n))
            yield bits, tuple(int(v) for v in self.outputs[k])


def restricted_function(c: Circuit) -> RestrictedFunction:
    _require_valid(c)
    pis = c.primary_inputs
    if len(pis) > MAX_EXHAUSTIVE_WIDTH:
        raise WidthTooLarge(f"{len(pis)} primary inputs exceed exhaustive limit {MAX_EXHAUSTIVE_WIDTH}")
    out_lines = sorted(c.outputs, key=lambda e: e[0])
    labels = tuple(cls.name if isinstance(cls, PrimaryOutput) else f"~{line}" for line, cls in out_lines)
    order = [line for line, _ in out_lines]
    assignments = np.arange(1 << len(pis), dtype=np.int64)
    final = run_lines(c, input_words(c, assignments))
    table = final[order].T.copy()
    # A restriction of a permutation must stay injective; check rather than assume.
    packed = _pack(final) if c.width < 63 else None
    if packed is not None:
        injective = np.unique(packed).size == packed.size
    else:
        injective = len({r.tobytes() for r in final.T}) == final.shape[1]
    return RestrictedFunction(tuple(name for _, name in pis), labels, table, bool(injective))


@dataclass(frozen=True)
class Metrics:
    gate_count: int = 0
    quantum_cost: int = 0
    constant_inputs: int = 0
    garbage_outputs: int = 0
    logic_cost: CostVector = ZERO_COST

    def __str__(self) -> str:
        return (f"gates={self.gate_count},ci={self.constant_inputs},go={self.garbage_outputs},"
                f"qc={self.quantum_cost},T={self.logic_cost}")


def metrics(c: Circuit) -> Metrics:
    _require_valid(c)
    logic = ZERO_COST
    for app in c.gates:
        logic = logic + app.gate.logic_cost
    return Metrics(
        gate_count=len(c.gates),
        quantum_cost=sum(app.gate.quantum_cost for app in c.gates),
        constant_inputs=len(c.constants),
        garbage_outputs=len(c.garbage_lines),
        logic_cost=logic,
    )


def append_inverse(c: Circuit) -> Circuit:
    """``c`` followed by its mirror image built from inverse gates."""
    _require_valid(c)
    mirror = [GateApplication(inverse_gate(app.gate), app.lines) for app in reversed(c.gates)]
    return c.with_gates(c.gates + tuple(mirror))


def concat(first: Circuit, second: Circuit) -> Circuit:
    """Gates of ``first`` then ``second``; line classifications come from ``first``."""
    if first.width != second.width:
        raise ValueError("cannot concatenate circuits of different widths")
    return first.with_gates(first.gates + second.gates)
