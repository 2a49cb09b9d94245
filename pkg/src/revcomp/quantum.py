"""State-vector check of NOT / CNOT / controlled-V / controlled-V+ cascades.

Used to confirm that a primitive decomposition realises a gate's classical
truth table and to count its quantum cost.  Line 0 is the most significant
qubit of a basis index, as in the rest of the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import BadIndex, WidthMismatch, WidthTooLarge
from .gates import GateSpec

MAX_QUANTUM_WIDTH = 12
DEFAULT_TOL = 1e-12


class PrimitiveKind(str, enum.Enum):
    X = "x"
    CNOT = "cnot"
    CV = "cv"
    CVDAG = "cvdag"

    @property
    def controlled(self) -> bool:
        return self is not PrimitiveKind.X


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_V = (1 + 1j) / 2 * np.array([[1, -1j], [-1j, 1]], dtype=complex)
_VDAG = _V.conj().T


def primitive_matrix(kind) -> np.ndarray:
    """2x2 action on the target qubit (applied when the control is 1)."""
    kind = PrimitiveKind(kind)
    if kind is PrimitiveKind.CV:
        return _V.copy()
    if kind is PrimitiveKind.CVDAG:
        return _VDAG.copy()
    return _X.copy()


@dataclass(frozen=True)
class QuantumPrimitive:
    kind: PrimitiveKind
    target: int
    control: Optional[int] = None

    def __post_init__(self):
        kind = PrimitiveKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind.controlled and self.control is None:
            raise ValueError(f"{kind.value} needs a control line")
        if not kind.controlled and self.control is not None:
            raise ValueError("x takes no control line")
        if self.control is not None and self.control == self.target:
            raise ValueError("control and target must differ")

    def inverse(self) -> "QuantumPrimitive":
        swap = {PrimitiveKind.CV: PrimitiveKind.CVDAG, PrimitiveKind.CVDAG: PrimitiveKind.CV}
        return QuantumPrimitive(swap.get(self.kind, self.kind), self.target, self.control)

    def lines(self) -> Tuple[int, ...]:
        return (self.target,) if self.control is None else (self.control, self.target)


def x(target: int) -> QuantumPrimitive:
    return QuantumPrimitive(PrimitiveKind.X, target)


def cnot(control: int, target: int) -> QuantumPrimitive:
    return QuantumPrimitive(PrimitiveKind.CNOT, target, control)


def cv(control: int, target: int) -> QuantumPrimitive:
    return QuantumPrimitive(PrimitiveKind.CV, target, control)


def cvdag(control: int, target: int) -> QuantumPrimitive:
    return QuantumPrimitive(PrimitiveKind.CVDAG, target, control)


@dataclass(frozen=True)
class PrimitiveSequence:
    width: int
    steps: Tuple[QuantumPrimitive, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def check_indices(self) -> None:
        for k, step in enumerate(self.steps):
            for line in step.lines():
                if not 0 <= line < self.width:
                    raise BadIndex(f"step #{k} uses line {line} outside 0..{self.width - 1}")

    def inverse(self) -> "PrimitiveSequence":
        return PrimitiveSequence(self.width, tuple(s.inverse() for s in reversed(self.steps)))

    def __len__(self) -> int:
        return len(self.steps)


def _apply_step(state: np.ndarray, step: QuantumPrimitive, width: int) -> np.ndarray:
    m = primitive_matrix(step.kind)
    idx = np.arange(state.size)
    tbit = 1 << (width - 1 - step.target)
    sel = (idx & tbit) == 0
    if step.control is not None:
        sel &= (idx & (1 << (width - 1 - step.control))) != 0
    i0 = idx[sel]
    i1 = i0 | tbit
    a0, a1 = state[i0], state[i1]
    out = state.copy()
    out[i0] = m[0, 0] * a0 + m[0, 1] * a1
    out[i1] = m[1, 0] * a0 + m[1, 1] * a1
    return out


def apply_state(seq: PrimitiveSequence, state: np.ndarray) -> np.ndarray:
    if seq.width > MAX_QUANTUM_WIDTH:
        raise WidthTooLarge(f"width {seq.width} exceeds state-vector limit {MAX_QUANTUM_WIDTH}")
    seq.check_indices()
    for step in seq.steps:
        state = _apply_step(state, step, seq.width)
    return state


def apply(seq: PrimitiveSequence, basis_in: int) -> np.ndarray:
    """Final state vector after running ``seq`` on basis state ``|basis_in>``."""
    if seq.width > MAX_QUANTUM_WIDTH:
        raise WidthTooLarge(f"width {seq.width} exceeds state-vector limit {MAX_QUANTUM_WIDTH}")
    size = 1 << seq.width
    if not 0 <= basis_in < size:
        raise BadIndex(f"basis state {basis_in} outside 0..{size - 1}")
    state = np.zeros(size, dtype=complex)
    state[basis_in] = 1.0
    return apply_state(seq, state)


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    counterexample: Optional[int] = None
    global_phase: Optional[complex] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(seq: PrimitiveSequence, g: GateSpec, tol: float = DEFAULT_TOL) -> DecompositionCheck:
    """Check that ``seq`` maps every basis state ``|x>`` to ``phase * |g(x)>``.

    One global phase is allowed across all inputs; differing per-input
    phases are rejected.  The first failing input is reported.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if seq.width != g.width:
        raise WidthMismatch(f"decomposition has {seq.width} lines, gate {g.name} has {g.width}")
    phase: Optional[complex] = None
    for x_in in range(1 << g.width):
        state = apply(seq, x_in)
        expected = g(x_in)
        amp = complex(state[expected])
        if abs(abs(amp) - 1.0) > tol:
            found = int(np.argmax(np.abs(state)))
            return DecompositionCheck(
                False, x_in, phase,
                f"input {x_in}: expected basis {expected}, amplitude there {abs(amp):.3g} (largest at {found})",
            )
        if phase is None:
            phase = amp
        elif abs(amp - phase) > tol:
            return DecompositionCheck(False, x_in, phase, f"input {x_in}: phase {amp} differs from global phase {phase}")
    return DecompositionCheck(True, None, phase, "")


def quantum_cost(seq: PrimitiveSequence) -> int:
    """Number of primitives; each X, CNOT, CV and CV+ costs one."""
    return len(seq.steps)


def toffoli_decomposition(a: int = 0, b: int = 1, c: int = 2, width: int = 3) -> PrimitiveSequence:
    """Five-primitive realisation of R = AB xor C."""
    return PrimitiveSequence(width, (cv(b, c), cnot(a, b), cvdag(b, c), cv(a, c), cnot(a, b)))


def peres_decomposition(a: int = 0, b: int = 1, c: int = 2, width: int = 3) -> PrimitiveSequence:
    """Four-primitive realisation of (A, A xor B, AB xor C)."""
    return PrimitiveSequence(width, (cv(b, c), cv(a, c), cnot(a, b), cvdag(b, c)))
