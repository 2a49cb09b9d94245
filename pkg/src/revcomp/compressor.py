"""n:2 reversible compressors built as a chain of Inventive0 full-adder stages.

Line layout of ``build_compressor(n)``::

    0 .. n-1            operands I1..In
    n .. n+k-1          carry-ins CIN1..CINk        (k = max(0, n-3))
    n+k .. n+k+s-1      constant-0 ancillas, one per stage (s = max(1, n-2))

Stage 1 takes (I1, I2, I3, 0).  Every later stage takes the running sum on
line 0 plus the next two unused inputs, operands before carry-ins, with
D tied to 0 so that Q is the true carry.  Each stage's Q is a primary carry
output; its R and S lines are garbage.  The final sum stays on line 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .circuit import (
    Circuit,
    ConstantInput,
    Garbage,
    GateApplication,
    Metrics,
    PrimaryInput,
    PrimaryOutput,
    input_words,
    iter_assignment_chunks,
    metrics,
    run_lines,
    validate,
)
from .errors import InvalidCircuit, NTooLarge, NTooSmall, RangeError, ShapeMismatch
from .gates import GateSpec, builtin_gate

MIN_N = 3
MAX_N = 14
SUM_NAME = "SUM"


@dataclass(frozen=True)
class CompressorSpec:
    n: int

    def __post_init__(self):
        if self.n < MIN_N:
            raise NTooSmall(f"a compressor needs n >= {MIN_N}, got {self.n}")

    @property
    def carry_ins(self) -> int:
        return max(0, self.n - 3)

    @property
    def stages(self) -> int:
        return max(1, self.n - 2)

    @property
    def input_names(self) -> List[str]:
        return [f"I{i}" for i in range(1, self.n + 1)] + [f"CIN{i}" for i in range(1, self.carry_ins + 1)]

    @property
    def carry_names(self) -> List[str]:
        return [f"C{i}" for i in range(1, self.stages + 1)]


@dataclass(frozen=True)
class PredictedMetrics:
    gate_count: int
    garbage_outputs: int
    ancilla_inputs: int
    quantum_cost: int


def build_compressor(n: int, gate: Optional[GateSpec] = None) -> Circuit:
    if n < MIN_N:
        raise NTooSmall(f"a compressor needs n >= {MIN_N}, got {n}")
    if n > MAX_N:
        raise NTooLarge(f"n={n} exceeds the exhaustive-verification bound {MAX_N}")
    inv0 = gate or builtin_gate("INV0")
    spec = CompressorSpec(n)
    names = spec.input_names
    n_in = len(names)
    ancillas = list(range(n_in, n_in + spec.stages))
    width = n_in + spec.stages

    inputs = [(line, PrimaryInput(name)) for line, name in enumerate(names)]
    inputs += [(line, ConstantInput(0)) for line in ancillas]

    # Fresh lines in consumption order after stage 1: operands, then carry-ins.
    pending = list(range(3, n_in))
    gates: List[GateApplication] = [GateApplication(inv0, (0, 1, 2, ancillas[0]))]
    carry_lines = [1]
    garbage = [2, ancillas[0]]
    for stage in range(1, spec.stages):
        b, c = pending[2 * (stage - 1)], pending[2 * (stage - 1) + 1]
        gates.append(GateApplication(inv0, (0, b, c, ancillas[stage])))
        carry_lines.append(b)
        garbage += [c, ancillas[stage]]

    outputs = [(0, PrimaryOutput(SUM_NAME))]
    outputs += [(line, PrimaryOutput(name)) for line, name in zip(carry_lines, spec.carry_names)]
    outputs += [(line, Garbage()) for line in garbage]
    return Circuit(width, tuple(inputs), tuple(outputs), tuple(gates))


@dataclass(frozen=True)
class CompressorCheck:
    ok: bool
    checked: int
    counterexample: Optional[Dict[str, int]] = None
    expected_total: Optional[int] = None
    observed_total: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_compressor(c: Circuit, n: int) -> CompressorCheck:
    """Exhaustively check sum(inputs) == SUM + 2 * sum(carries).

    Carries are all primary outputs other than ``SUM``.  Stops at the first
    failing assignment and reports it.
    """
    spec = CompressorSpec(n)
    if n > MAX_N:
        raise NTooLarge(f"n={n} exceeds the exhaustive-verification bound {MAX_N}")
    diags = validate(c)
    if diags:
        raise InvalidCircuit(diags)
    pis = c.primary_inputs
    expected_inputs = n + spec.carry_ins
    if len(pis) != expected_inputs:
        raise ShapeMismatch(f"{n}:2 compressor needs {expected_inputs} primary inputs, circuit has {len(pis)}")
    outs = dict((name, line) for line, name in c.primary_outputs)
    if SUM_NAME not in outs:
        raise ShapeMismatch(f"circuit has no {SUM_NAME} output")
    sum_line = outs.pop(SUM_NAME)
    carry_lines = sorted(outs.values())
    if not carry_lines:
        raise ShapeMismatch("circuit has no carry outputs")

    n_in = len(pis)
    checked = 0
    for chunk in iter_assignment_chunks(n_in):
        final = run_lines(c, input_words(c, chunk))
        ones = np.zeros(chunk.size, dtype=np.int64)
        for k in range(n_in):
            ones += (chunk >> k) & 1
        weighted = final[sum_line].astype(np.int64) + 2 * final[carry_lines].astype(np.int64).sum(axis=0)
        bad = np.flatnonzero(ones != weighted)
        if bad.size:
            i = int(bad[0])
            word = int(chunk[i])
            cex = {name: (word >> (n_in - 1 - k)) & 1 for k, (_, name) in enumerate(pis)}
            return CompressorCheck(False, checked + i + 1, cex, int(ones[i]), int(weighted[i]))
        checked += chunk.size
    return CompressorCheck(True, checked)


def predicted_metrics(n: int) -> PredictedMetrics:
    """Closed-form gate count, garbage, ancillas and quantum cost for n >= 4.

    Quantum cost is 10 per Inventive0 stage, i.e. 10(n-2).
    """
    if n < 4:
        raise NTooSmall(f"the closed forms hold for n >= 4, got {n}")
    return PredictedMetrics(gate_count=n - 2, garbage_outputs=2 * n - 4, ancilla_inputs=n - 2, quantum_cost=10 * (n - 2))


LEMMA_FIELDS = (
    ("gate_count", "gate_count"),
    ("garbage_outputs", "garbage_outputs"),
    ("ancilla_inputs", "constant_inputs"),
    ("quantum_cost", "quantum_cost"),
)


@dataclass(frozen=True)
class LemmaRow:
    n: int
    predicted: PredictedMetrics
    measured: Metrics
    matches: Tuple[Tuple[str, bool], ...]
    literal_qc_formula: int

    @property
    def all_match(self) -> bool:
        return all(ok for _, ok in self.matches)


def lemma_report(n_lo: int, n_hi: int) -> List[LemmaRow]:
    if not 4 <= n_lo <= n_hi <= 12:
        raise RangeError(f"need 4 <= n_lo <= n_hi <= 12, got ({n_lo}, {n_hi})")
    rows = []
    for n in range(n_lo, n_hi + 1):
        pred = predicted_metrics(n)
        meas = metrics(build_compressor(n))
        matches = tuple((p, getattr(pred, p) == getattr(meas, m)) for p, m in LEMMA_FIELDS)
        rows.append(LemmaRow(n, pred, meas, matches, 10 * (n - 3)))
    return rows


QC_NOTE = (
    "qc_10(n-3) is the alternative closed form 10(n-3), listed for comparison only: "
    "it undercounts one 10-cost stage for every n (20 vs 10 at n=4, 30 vs 20 at n=5). "
    "Predictions use 10(n-2)."
)


def format_lemma_report(rows: List[LemmaRow]) -> str:
    head = "n  gates(p/m)  garbage(p/m)  ancilla(p/m)  qc(p/m)  qc_10(n-3)  match"
    lines = [head]
    for r in rows:
        p, m = r.predicted, r.measured
        lines.append(
            f"{r.n:<2} {p.gate_count:>5}/{m.gate_count:<5} {p.garbage_outputs:>6}/{m.garbage_outputs:<6}"
            f" {p.ancilla_inputs:>6}/{m.constant_inputs:<6} {p.quantum_cost:>4}/{m.quantum_cost:<4}"
            f" {r.literal_qc_formula:>10}  {'yes' if r.all_match else 'NO'}"
        )
    lines.append(QC_NOTE)
    return "\n".join(lines)
