"""Reversible gates as truth-table-backed permutations.

Bit convention used everywhere in the package: port 0 of a gate (input A,
output P) is the most significant bit of the word.  For a 4-port gate the
word ``0b1101`` therefore means A=1, B=1, C=0, D=1.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .errors import BadArity, DuplicateGate, NonBijective, UnknownGate, UnknownPort

MAX_GATE_WIDTH = 8

INPUT_PORT_NAMES = "ABCDEFGH"
OUTPUT_PORT_NAMES = "PQRSTUVW"


def word_to_bits(word: int, width: int) -> Tuple[int, ...]:
    """Split ``word`` into ``width`` bits, most significant first."""
    return tuple((word >> (width - 1 - i)) & 1 for i in range(width))


def bits_to_word(bits: Iterable[int]) -> int:
    word = 0
    for b in bits:
        word = (word << 1) | (b & 1)
    return word


@dataclass(frozen=True)
class TruthTable:
    """A bijection on ``width``-bit words.

    ``mapping[x]`` is the output word for input word ``x``.  Construction
    fails unless the mapping is a permutation of ``range(2**width)``.
    """

    width: int
    mapping: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.width, int) or self.width < 1:
            raise BadArity(f"width must be a positive integer, got {self.width!r}")
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        size = 1 << self.width
        if len(mapping) != size:
            raise BadArity(f"width {self.width} needs {size} rows, got {len(mapping)}")
        seen = bytearray(size)
        for word in mapping:
            if not 0 <= word < size:
                raise NonBijective(f"output word {word} out of range for width {self.width}", word)
            if seen[word]:
                raise NonBijective(f"output word {word:#x} appears more than once", word)
            seen[word] = 1

    @classmethod
    def identity(cls, width: int) -> "TruthTable":
        return cls(width, tuple(range(1 << width)))

    def __call__(self, word: int) -> int:
        return self.mapping[word]

    def __len__(self) -> int:
        return len(self.mapping)

    def __iter__(self) -> Iterator[int]:
        return iter(self.mapping)

    def inverse(self) -> "TruthTable":
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return TruthTable(self.width, tuple(inv))

    def then(self, other: "TruthTable") -> "TruthTable":
        """Composition: apply ``self`` first, then ``other``."""
        if other.width != self.width:
            raise BadArity("cannot compose tables of different widths")
        return TruthTable(self.width, tuple(other.mapping[y] for y in self.mapping))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.mapping))


@dataclass(frozen=True)
class CostVector:
    """Logical-calculation cost: counts of 2-input XOR (alpha), 2-input AND
    (beta) and NOT (delta) operations."""

    alpha: int = 0
    beta: int = 0
    delta: int = 0

    def __post_init__(self):
        if min(self.alpha, self.beta, self.delta) < 0:
            raise ValueError("cost components must be non-negative")

    def __add__(self, other: "CostVector") -> "CostVector":
        if not isinstance(other, CostVector):
            return NotImplemented
        return CostVector(self.alpha + other.alpha, self.beta + other.beta, self.delta + other.delta)

    def __mul__(self, k: int) -> "CostVector":
        return CostVector(self.alpha * k, self.beta * k, self.delta * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.alpha}A+{self.beta}B+{self.delta}D"

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.alpha, self.beta, self.delta)


ZERO_COST = CostVector()


@dataclass(frozen=True)
class GateSpec:
    name: str
    table: TruthTable
    quantum_cost: int = 0
    logic_cost: CostVector = ZERO_COST
    transistor_count: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "name", self.name.upper())
        if self.quantum_cost < 0:
            raise ValueError("quantum_cost must be non-negative")
        if self.transistor_count is not None and self.transistor_count < 0:
            raise ValueError("transistor_count must be non-negative")

    @property
    def width(self) -> int:
        return self.table.width

    def __call__(self, word: int) -> int:
        return self.table(word)

    def with_costs(self, **changes) -> "GateSpec":
        return replace(self, **changes)


def _table_from_function(width: int, fn: Callable[..., Sequence[int]]) -> TruthTable:
    rows = []
    for word in range(1 << width):
        rows.append(bits_to_word(fn(*word_to_bits(word, width))))
    return TruthTable(width, tuple(rows))


def derived_inv0_expressions(a: int, b: int, c: int, d: int) -> Tuple[int, int, int, int]:
    """Closed-form outputs (P, Q, R, S) of the Inventive0 gate.

    P is the full-adder sum, Q the full-adder carry XOR D, R passes C through
    and S is the complemented full-subtractor borrow XOR D.
    """
    x = a ^ b
    p = x ^ c
    q = ((x & c) | (a & b)) ^ d
    r = c
    s = (((x ^ 1) & c) | ((a ^ 1) & b)) ^ d ^ 1
    return (p, q, r, s)


# Rows of the Inventive0 truth table, input word ABCD -> output word PQRS.
INV0_ROWS: Tuple[int, ...] = (
    0b0001, 0b0100, 0b1010, 0b1111,
    0b1000, 0b1101, 0b0110, 0b0011,
    0b1001, 0b1100, 0b0111, 0b0010,
    0b0101, 0b0000, 0b1110, 0b1011,
)

_BUILTIN_FUNCTIONS: Dict[str, Tuple[int, Callable[..., Sequence[int]]]] = {
    "NOT": (1, lambda a: (a ^ 1,)),
    "CNOT": (2, lambda a, b: (a, a ^ b)),
    "TG": (3, lambda a, b, c: (a, b, (a & b) ^ c)),
    "F2G": (3, lambda a, b, c: (a, a ^ b, a ^ c)),
    "PG": (3, lambda a, b, c: (a, a ^ b, (a & b) ^ c)),
    # Standard Fredkin (controlled swap on B, C when A=1).
    "FRG": (3, lambda a, b, c: (a, ((a ^ 1) & b) | (a & c), (a & b) | ((a ^ 1) & c))),
    "BJN": (3, lambda a, b, c: (a, b, (a | b) ^ c)),
    "URG": (3, lambda a, b, c: ((a | b) ^ c, b, (a & b) ^ c)),
}

# TG, PG and INV0 costs are fixed by the literature table; the rest are
# conventional defaults and may be overridden with GateSpec.with_costs.
DEFAULT_QUANTUM_COSTS: Dict[str, int] = {
    "NOT": 1,
    "CNOT": 1,
    "F2G": 2,
    "TG": 5,
    "PG": 4,
    "FRG": 5,
    "BJN": 5,
    "URG": 6,
    "INV0": 10,
}

DEFAULT_LOGIC_COSTS: Dict[str, CostVector] = {
    "INV0": CostVector(7, 4, 3),
}

BUILTIN_NAMES: Tuple[str, ...] = ("NOT", "CNOT", "F2G", "TG", "PG", "FRG", "BJN", "URG", "INV0")
ALIASES: Dict[str, str] = {"FG": "CNOT"}


def _make_builtin(name: str) -> GateSpec:
    if name == "INV0":
        table = TruthTable(4, INV0_ROWS)
    else:
        width, fn = _BUILTIN_FUNCTIONS[name]
        table = _table_from_function(width, fn)
    return GateSpec(
        name=name,
        table=table,
        quantum_cost=DEFAULT_QUANTUM_COSTS[name],
        logic_cost=DEFAULT_LOGIC_COSTS.get(name, ZERO_COST),
    )


_BUILTINS: Dict[str, GateSpec] = {n: _make_builtin(n) for n in BUILTIN_NAMES}


def builtin_gate(name: str) -> GateSpec:
    """Look up one of the library gates by (case-insensitive) name."""
    key = name.upper()
    key = ALIASES.get(key, key)
    try:
        return _BUILTINS[key]
    except KeyError:
        raise UnknownGate(f"unknown gate {name!r}") from None


def gate_from_truth_table(
    name: str,
    width: int,
    rows: Sequence[int],
    quantum_cost: int = 0,
    logic_cost: CostVector = ZERO_COST,
    transistor_count: Optional[int] = None,
) -> GateSpec:
    if not 1 <= width <= MAX_GATE_WIDTH:
        raise BadArity(f"gate width must be in 1..{MAX_GATE_WIDTH}, got {width}")
    if len(rows) != 1 << width:
        raise BadArity(f"width {width} needs {1 << width} rows, got {len(rows)}")
    return GateSpec(name, TruthTable(width, tuple(rows)), quantum_cost, logic_cost, transistor_count)


def inverse_gate(g: GateSpec) -> GateSpec:
    """Gate realizing the inverse permutation, with costs copied from ``g``.

    The inverse of ``X`` is named ``X_INV``; inverting ``X_INV`` gives back ``X``.
    """
    name = g.name[:-4] if g.name.endswith("_INV") else g.name + "_INV"
    return replace(g, name=name, table=g.table.inverse())


Port = Union[int, str]


def _port_index(g: GateSpec, port: Port) -> int:
    if isinstance(port, str):
        letter = port.upper()
        if len(letter) == 1 and letter in INPUT_PORT_NAMES[: g.width]:
            return INPUT_PORT_NAMES.index(letter)
        raise UnknownPort(f"gate {g.name} has no port {port!r}")
    if isinstance(port, int) and 0 <= port < g.width:
        return port
    raise UnknownPort(f"gate {g.name} has no port {port!r}")


@dataclass(frozen=True)
class ModeTable:
    """A gate restricted to fixed values on some input ports.

    ``rows`` maps each assignment of the free inputs (in port order) to the
    full output tuple (P, Q, ...).
    """

    gate: str
    free_ports: Tuple[int, ...]
    pinned: Tuple[Tuple[int, int], ...]
    rows: Dict[Tuple[int, ...], Tuple[int, ...]] = field(compare=False)

    def output(self, *free_bits: int) -> Tuple[int, ...]:
        return self.rows[tuple(free_bits)]

    def column(self, port: Port) -> Dict[Tuple[int, ...], int]:
        """One output column, by index or output letter (P, Q, ...)."""
        if isinstance(port, str):
            idx = OUTPUT_PORT_NAMES.find(port.upper())
        else:
            idx = port
        width = len(self.free_ports) + len(self.pinned)
        if not 0 <= idx < width:
            raise UnknownPort(f"no output port {port!r}")
        return {k: v[idx] for k, v in self.rows.items()}


def mode_table(g: GateSpec, pinned: Mapping[Port, int]) -> ModeTable:
    fixed: Dict[int, int] = {}
    for port, bit in pinned.items():
        if bit not in (0, 1):
            raise ValueError(f"pinned value must be 0 or 1, got {bit!r}")
        fixed[_port_index(g, port)] = bit
    free = tuple(i for i in range(g.width) if i not in fixed)
    rows: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    for k in range(1 << len(free)):
        free_bits = word_to_bits(k, len(free)) if free else ()
        bits = [0] * g.width
        for i, b in zip(free, free_bits):
            bits[i] = b
        for i, b in fixed.items():
            bits[i] = b
        rows[free_bits] = word_to_bits(g(bits_to_word(bits)), g.width)
    return ModeTable(g.name, free, tuple(sorted(fixed.items())), rows)


class GateRegistry:
    """Case-insensitive name -> GateSpec lookup, preloaded with the builtins.

    Builtin names (and aliases) cannot be redefined.
    """

    def __init__(self, gates: Iterable[GateSpec] = ()):
        self._gates: Dict[str, GateSpec] = dict(_BUILTINS)
        for g in gates:
            self.register(g)

    def register(self, gate: GateSpec) -> None:
        key = gate.name.upper()
        if key in self._gates or key in ALIASES:
            raise DuplicateGate(f"gate {key} is already defined")
        self._gates[key] = gate

    def configure(self, name: str, **costs) -> GateSpec:
        """Override cost metadata (quantum_cost, logic_cost, transistor_count)
        of a registered gate.  The truth table cannot be changed."""
        unknown = set(costs) - {"quantum_cost", "logic_cost", "transistor_count"}
        if unknown:
            raise TypeError(f"not a cost field: {', '.join(sorted(unknown))}")
        gate = self.get(name)
        updated = replace(gate, **costs)
        self._gates[gate.name] = updated
        return updated

    def get(self, name: str) -> GateSpec:
        key = name.upper()
        key = ALIASES.get(key, key)
        try:
            return self._gates[key]
        except KeyError:
            raise UnknownGate(f"unknown gate {name!r}") from None

    def __contains__(self, name: str) -> bool:
        key = name.upper()
        return ALIASES.get(key, key) in self._gates

    def __iter__(self) -> Iterator[GateSpec]:
        return iter(self._gates.values())

    def __len__(self) -> int:
        return len(self._gates)

    def user_gates(self):
        return [g for k, g in self._gates.items() if k not in _BUILTINS]

    def load_transistor_counts(self, counts: Mapping[str, int]) -> None:
        for name, count in counts.items():
            self.configure(name, transistor_count=count)
