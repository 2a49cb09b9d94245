"""Reversible-logic gate library, n:2 compressor synthesis and exhaustive verification."""

from .circuit import (
    Circuit,
    ConstantInput,
    Diagnostic,
    Garbage,
    GateApplication,
    Metrics,
    PrimaryInput,
    PrimaryOutput,
    append_inverse,
    concat,
    full_permutation,
    metrics,
    restricted_function,
    simulate,
    validate,
)
from .compressor import (
    CompressorSpec,
    PredictedMetrics,
    build_compressor,
    lemma_report,
    predicted_metrics,
    verify_compressor,
)
from .gates import (
    CostVector,
    GateRegistry,
    GateSpec,
    TruthTable,
    builtin_gate,
    derived_inv0_expressions,
    gate_from_truth_table,
    inverse_gate,
    mode_table,
)
from .netlist import emit, parse
from .quantum import (
    PrimitiveSequence,
    QuantumPrimitive,
    apply,
    primitive_matrix,
    quantum_cost,
    verify_decomposition,
)

__version__ = "0.1.0"
