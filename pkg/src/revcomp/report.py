"""Comparison table of compressor designs (measured rows vs. published rows)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .circuit import Circuit, metrics

COLUMNS = ("design", "gate_count", "constant_inputs", "garbage_outputs", "quantum_cost", "source")


@dataclass(frozen=True)
class ComparisonRow:
    design: str
    gate_count: int
    constant_inputs: int
    garbage_outputs: int
    quantum_cost: int
    source: str  # "measured" or "literature"

    def values(self):
        return (self.design, self.gate_count, self.constant_inputs, self.garbage_outputs,
                self.quantum_cost, self.source)


# Published 4:2 compressor figures, kept verbatim (two rows share the
# "Existing design 4" label and differ only by reference tag).
LITERATURE_4_2: Sequence[ComparisonRow] = (
    ComparisonRow("Existing design 1 [3]", 4, 3, 5, 28, "literature"),
    ComparisonRow("Existing design 2 [3]", 7, 3, 5, 20, "literature"),
    ComparisonRow("Existing design 4 [3]", 2, 2, 3, 26, "literature"),
    ComparisonRow("Existing design 4 [15]", 2, 3, 5, 18, "literature"),
)


def measured_row(name: str, c: Circuit) -> ComparisonRow:
    m = metrics(c)
    return ComparisonRow(name, m.gate_count, m.constant_inputs, m.garbage_outputs, m.quantum_cost, "measured")


def comparison_rows(proposed: Circuit, n: int = 4) -> List[ComparisonRow]:
    """Measured row for ``proposed`` followed by the published rows for the
    same compressor size (only 4:2 figures are on record)."""
    rows = [measured_row("Proposed", proposed)]
    if n == 4:
        rows.extend(LITERATURE_4_2)
    return rows


def format_csv(rows: Sequence[ComparisonRow]) -> str:
    lines = [",".join(COLUMNS)]
    lines += [",".join(str(v) for v in r.values()) for r in rows]
    return "\n".join(lines) + "\n"


def format_markdown(rows: Sequence[ComparisonRow], n: int = 4) -> str:
    head = f"| {n}:2 compressor | Gate count | Constant inputs | Garbage outputs | Quantum cost | Source |"
    lines = [head, "|---|---:|---:|---:|---:|---|"]
    for r in rows:
        lines.append("| " + " | ".join(str(v) for v in r.values()) + " |")
    return "\n".join(lines) + "\n"
