import io
import subprocess
import sys

import pytest

from revcomp.circuit import validate
from revcomp.cli import main
from revcomp.compressor import build_compressor
from revcomp.netlist import emit, emit_decomposition, parse
from revcomp.quantum import peres_decomposition, toffoli_decomposition


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def c42(tmp_path):
    p = tmp_path / "c42.net"
    p.write_text(emit(build_compressor(4)))
    return p


def test_truth():
    code, out, _ = run("truth", "inv0")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "A B C D | P Q R S" and len(lines) == 17
    assert lines[1] == "0 0 0 0 | 0 0 0 1"
    assert lines[14] == "1 1 0 1 | 0 0 0 0"


def test_synth_and_metrics(tmp_path):
    target = tmp_path / "c.net"
    assert run("synth", "compressor", "--n", "4", "-o", str(target))[0] == 0
    assert target.read_text() == emit(build_compressor(4))
    code, out, _ = run("metrics", str(target))
    assert (code, out) == (0, "gates=2,ci=2,go=4,qc=20,T=14A+8B+6D\n")


def test_synth_to_stdout():
    code, out, _ = run("synth", "compressor", "--n", "5")
    assert code == 0 and out.count("apply INV0") == 3


def test_sim(c42):
    code, out, _ = run("sim", str(c42), "--in", "I1=0,I2=0,I3=0,I4=0,CIN1=0")
    assert (code, out) == (0, "SUM=0\nC1=0\nC2=0\n")
    code, out, _ = run("sim", str(c42), "--in", "I1=1,I2=1,I3=1,I4=0,CIN1=0", "--garbage")
    assert code == 0 and out.startswith("SUM=1\nC1=1\nC2=0\n") and "~5=" in out


@pytest.mark.parametrize("spec", ["I1=1", "I1=2,I2=0,I3=0,I4=0,CIN1=0", "I1", "I1=0,I2=0,I3=0,I4=0,CIN1=0,ZZ=1"])
def test_sim_usage_errors(c42, spec):
    code, _, err = run("sim", str(c42), "--in", spec)
    assert code == 2 and err


def test_check_compressor(c42, tmp_path):
    code, out, _ = run("check-compressor", str(c42), "--n", "4")
    assert code == 0 and "32" in out
    bad = tmp_path / "bad.net"
    bad.write_text(c42.read_text().replace("output 0 SUM", "garbage 0").replace("garbage 2", "output 2 SUM"))
    code, out, _ = run("check-compressor", str(bad), "--n", "4")
    assert code == 1 and out.startswith("FAIL")
    assert run("check-compressor", str(c42), "--n", "5")[0] == 2


CORRUPTIONS = [
    ("apply INV0 0 3 4 6", "apply INV0 0 3 4 7"),   # out of range
    ("apply INV0 0 3 4 6", "apply INV0 0 3 3 6"),   # duplicate line
    ("apply INV0 0 3 4 6", "apply INV0 0 3 4"),     # arity
    ("const 6 0", "const 5 1"),                      # line 5 twice, 6 unclassified
    ("output 3 C2", "output 3 C1"),                  # duplicate name
    ("garbage 6\n", ""),                             # unclassified output
]


@pytest.mark.parametrize("old, new", CORRUPTIONS)
def test_verify_agrees_with_validation(c42, tmp_path, old, new):
    text = c42.read_text()
    assert old in text
    broken = tmp_path / "broken.net"
    broken.write_text(text.replace(old, new))
    diags = validate(parse(broken.read_text()).circuit)
    code, out, _ = run("verify", str(broken))
    assert diags and code == 1 and out.count("FAIL") == len(diags)


def test_verify_ok(c42, tmp_path):
    code, out, _ = run("verify", str(c42))
    assert code == 0 and "128" in out
    garbled = tmp_path / "g.net"
    garbled.write_text("apply INV0 0 1 2 3\n")
    assert run("verify", str(garbled))[0] == 1


def test_qcheck(tmp_path):
    tof = tmp_path / "tof.q"
    tof.write_text(emit_decomposition(toffoli_decomposition()))
    per = tmp_path / "per.q"
    per.write_text(emit_decomposition(peres_decomposition()))
    code, out, _ = run("qcheck", "TG", "--decomp", str(tof))
    assert code == 0 and "cost 5" in out
    code, out, _ = run("qcheck", "pg", "--decomp", str(per), "--tol", "1e-9")
    assert code == 0 and "cost 4" in out
    assert run("qcheck", "PG", "--decomp", str(tof))[0] == 1
    assert run("qcheck", "CNOT", "--decomp", str(tof))[0] == 2


EXPECTED_CSV = (
    "design,gate_count,constant_inputs,garbage_outputs,quantum_cost,source\n"
    "Proposed,2,2,4,20,measured\n"
    "Existing design 1 [3],4,3,5,28,literature\n"
    "Existing design 2 [3],7,3,5,20,literature\n"
    "Existing design 4 [3],2,2,3,26,literature\n"
    "Existing design 4 [15],2,3,5,18,literature\n"
)


def test_compare_csv_and_markdown():
    code, out, _ = run("compare", "--n", "4", "--format", "csv")
    assert (code, out) == (0, EXPECTED_CSV)
    code, out, _ = run("compare", "--n", "4")
    assert code == 0 and "| Proposed | 2 | 2 | 4 | 20 | measured |" in out
    assert "| Existing design 4 [15] | 2 | 3 | 5 | 18 | literature |" in out


def test_compare_row_is_measured(c42, tmp_path):
    fewer = tmp_path / "fewer.net"
    fewer.write_text(c42.read_text().replace("apply INV0 0 3 4 6\n", ""))
    code, out, _ = run("compare", "--n", "4", "--format", "csv", "--netlist", str(fewer))
    assert code == 0 and "Proposed,1,2,4,10,measured" in out


def test_lemmas_and_gates():
    code, out, _ = run("lemmas", "--lo", "4", "--hi", "6")
    assert code == 0 and "10(n-3)" in out
    assert run("lemmas", "--lo", "6", "--hi", "4")[0] == 2
    code, out, _ = run("gates")
    assert code == 0 and "gate INV0 4" in out


def test_user_gate_table(tmp_path):
    gates = tmp_path / "g.tbl"
    gates.write_text("gate SWAP 2 0,2,1,3 3 0 0 0\n")
    net = tmp_path / "s.net"
    net.write_text("width 2\ninput 0 A\ninput 1 B\napply SWAP 0 1\noutput 0 X\noutput 1 Y\n")
    code, out, _ = run("sim", str(net), "--in", "A=1,B=0", "--gates", str(gates))
    assert (code, out) == (0, "X=0\nY=1\n")
    assert run("sim", str(net), "--in", "A=1,B=0")[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("metrics", "/nonexistent/file")[0] == 2
    assert run("truth", "NAND")[0] == 2


def test_module_entry_point(c42):
    proc = subprocess.run([sys.executable, "-m", "revcomp", "metrics", str(c42)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "gates=2,ci=2,go=4,qc=20,T=14A+8B+6D\n"
