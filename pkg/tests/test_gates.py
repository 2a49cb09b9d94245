import pytest
from hypothesis import given, strategies as st

from revcomp.errors import BadArity, DuplicateGate, NonBijective, UnknownGate, UnknownPort
from revcomp.gates import (
    BUILTIN_NAMES,
    CostVector,
    GateRegistry,
    TruthTable,
    builtin_gate,
    derived_inv0_expressions,
    gate_from_truth_table,
    inverse_gate,
    mode_table,
)

from conftest import INV0_TABLE_ROWS, assignments, bits, word


def test_inv0_matches_every_table_row():
    g = builtin_gate("INV0")
    for ins, outs in INV0_TABLE_ROWS:
        assert g(word(ins)) == word(outs), ins


def test_spot_rows():
    inv0 = builtin_gate("INV0")
    assert inv0(0b0000) == 0b0001
    assert inv0(0b1101) == 0b0000
    assert builtin_gate("CNOT")(0b10) == 0b11


def test_declared_costs():
    assert builtin_gate("PG").quantum_cost == 4
    assert builtin_gate("TG").quantum_cost == 5
    assert builtin_gate("INV0").quantum_cost == 10
    assert builtin_gate("INV0").logic_cost == CostVector(7, 4, 3)


def test_lookup_is_case_insensitive_with_alias():
    assert builtin_gate("inv0") is builtin_gate("INV0")
    assert builtin_gate("fg").table == builtin_gate("CNOT").table


def test_unknown_gate():
    with pytest.raises(UnknownGate):
        builtin_gate("NAND")


# Independent per-gate reference functions (bit-level formulas).
REFERENCE = {
    "NOT": lambda a: (1 - a,),
    "CNOT": lambda a, b: (a, a ^ b),
    "TG": lambda a, b, c: (a, b, (a and b) ^ c),
    "F2G": lambda a, b, c: (a, a ^ b, a ^ c),
    "PG": lambda a, b, c: (a, a ^ b, (a and b) ^ c),
    "FRG": lambda a, b, c: (a, c if a else b, b if a else c),
    "BJN": lambda a, b, c: (a, b, (a or b) ^ c),
    "URG": lambda a, b, c: ((a or b) ^ c, b, (a and b) ^ c),
}


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_builtin_logic_functions(name):
    g = builtin_gate(name)
    for ins in assignments(g.width):
        assert bits(g(word(ins)), g.width) == tuple(int(v) for v in REFERENCE[name](*ins))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_are_bijective_and_invertible(name):
    g = builtin_gate(name)
    assert sorted(g.table.mapping) == list(range(1 << g.width))
    inv = inverse_gate(g)
    for x in range(1 << g.width):
        assert inv(g(x)) == x


def test_gate_from_truth_table():
    ident = gate_from_truth_table("ID2", 2, [0, 1, 2, 3])
    assert ident.table.is_identity()
    assert ident.quantum_cost == 0 and ident.logic_cost == CostVector()
    copy = gate_from_truth_table("MYINV0", 4, [word(o) for _, o in INV0_TABLE_ROWS])
    assert copy.table == builtin_gate("INV0").table


def test_non_bijective_reports_duplicate_word():
    with pytest.raises(NonBijective) as exc:
        gate_from_truth_table("BAD", 1, [0, 0])
    assert exc.value.word == 0
    with pytest.raises(NonBijective) as exc:
        gate_from_truth_table("BAD", 2, [3, 1, 3, 0])
    assert exc.value.word == 3


@pytest.mark.parametrize("width, rows", [(2, [0, 1, 2]), (0, []), (9, list(range(512))), (1, [0, 1, 0, 1])])
def test_bad_arity(width, rows):
    with pytest.raises(BadArity):
        gate_from_truth_table("BAD", width, rows)


def test_inverse_gate():
    cnot = builtin_gate("CNOT")
    assert inverse_gate(cnot).table == cnot.table
    ident = gate_from_truth_table("ID", 3, list(range(8)))
    assert inverse_gate(ident).table == ident.table
    inv0 = builtin_gate("INV0")
    back = inverse_gate(inv0)
    assert inv0.table.then(back.table).is_identity()
    assert back.quantum_cost == 10 and back.logic_cost == inv0.logic_cost
    assert inverse_gate(back).name == "INV0"


def test_inverse_by_lookup_matches_table_rows():
    inv = inverse_gate(builtin_gate("INV0"))
    for ins, outs in INV0_TABLE_ROWS:
        assert inv(word(outs)) == word(ins)


@pytest.mark.parametrize("ins, outs", [((0, 1, 1, 0), (0, 1, 1, 0)), ((1, 0, 1, 0), (0, 1, 1, 1)), ((0, 0, 0, 0), (0, 0, 0, 1))])
def test_derived_expression_examples(ins, outs):
    assert derived_inv0_expressions(*ins) == outs


def test_derived_expressions_agree_with_table():
    for ins, outs in INV0_TABLE_ROWS:
        assert derived_inv0_expressions(*ins) == outs


def test_mode_xor_and():
    m = mode_table(builtin_gate("INV0"), {"C": 0, "D": 0})
    assert m.free_ports == (0, 1)
    for a, b in assignments(2):
        p, q, _, _ = m.output(a, b)
        assert (p, q) == (a ^ b, a & b)
    assert m.output(1, 1)[:2] == (0, 1)


def test_mode_xnor_or():
    m = mode_table(builtin_gate("INV0"), {2: 1, 3: 0})
    for a, b in assignments(2):
        p, q, _, _ = m.output(a, b)
        assert (p, q) == (1 - (a ^ b), a | b)


def test_mode_full_adder_and_subtractor():
    inv0 = builtin_gate("INV0")
    adder = mode_table(inv0, {"D": 0})
    sub = mode_table(inv0, {"D": 1})
    for a, b, c in assignments(3):
        total = a + b + c
        p, q, _, _ = adder.output(a, b, c)
        assert (p, q) == (total % 2, total // 2)
        assert sub.output(a, b, c)[3] == int(a - b - c < 0)
    assert adder.output(1, 1, 1)[:2] == (1, 1)
    assert adder.column("Q")[(1, 1, 1)] == 1


def test_mode_without_pins_is_full_table():
    for name in BUILTIN_NAMES:
        g = builtin_gate(name)
        m = mode_table(g, {})
        assert m.free_ports == tuple(range(g.width))
        for ins in assignments(g.width):
            assert m.output(*ins) == bits(g(word(ins)), g.width)


@pytest.mark.parametrize("port", ["E", 4, -1, "PQ"])
def test_mode_unknown_port(port):
    with pytest.raises(UnknownPort):
        mode_table(builtin_gate("INV0"), {port: 0})


def test_registry():
    reg = GateRegistry()
    assert "fg" in reg and "inv0" in reg
    with pytest.raises(DuplicateGate):
        reg.register(gate_from_truth_table("cnot", 2, [0, 1, 3, 2]))
    with pytest.raises(DuplicateGate):
        reg.register(gate_from_truth_table("FG", 2, [0, 1, 3, 2]))
    swap = gate_from_truth_table("swap", 2, [0, 2, 1, 3], quantum_cost=3)
    reg.register(swap)
    assert reg.get("SWAP") is swap
    with pytest.raises(DuplicateGate):
        reg.register(gate_from_truth_table("Swap", 2, [0, 2, 1, 3]))
    assert reg.user_gates() == [swap]


def test_registry_cost_overrides_do_not_leak():
    reg = GateRegistry()
    reg.configure("URG", quantum_cost=7)
    reg.load_transistor_counts({"CNOT": 6})
    assert reg.get("URG").quantum_cost == 7
    assert reg.get("FG").transistor_count == 6
    assert builtin_gate("URG").quantum_cost == 6
    assert builtin_gate("CNOT").transistor_count is None
    with pytest.raises(TypeError):
        reg.configure("URG", table=None)


def test_cost_vector_algebra():
    a, b = CostVector(1, 2, 3), CostVector(4, 0, 1)
    assert a + b == b + a == CostVector(5, 2, 4)
    assert a + CostVector() == a
    assert 2 * CostVector(7, 4, 3) == CostVector(14, 8, 6)
    assert str(CostVector(14, 8, 6)) == "14A+8B+6D"


costs = st.builds(CostVector, st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))


@given(costs, costs, costs)
def test_cost_vector_add_is_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(st.integers(1, 6).flatmap(lambda w: st.permutations(list(range(1 << w)))))
def test_random_permutation_roundtrip(rows):
    width = len(rows).bit_length() - 1
    t = TruthTable(width, rows)
    assert t.then(t.inverse()).is_identity()
    assert t.inverse().then(t).is_identity()
