import io
import json
from fractions import Fraction
import subprocess
import sys

import pytest

from rbkit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_count():
    assert call("count", "--k", "5") == (0, "9496\n", "")


def test_count_json():
    code, out, _ = call("count", "--k", "3", "--json")
    assert code == 0 and json.loads(out) == {"k": 3, "count": 76}


def test_rsk_example4(example4_path):
    code, out, _ = call("rsk", "--diagram", str(example4_path), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["P"]["shapes"] == [[], [1], [2], [2, 1], [1, 1], [2, 1], [2, 1]]
    assert data["Q"]["shapes"] == [[], [1], [1], [1, 1], [2, 1], [3, 1], [2, 1]]


def test_relations_flags_discrepancy():
    code, out, _ = call("relations", "--k", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    printed = [r for r in data["relations"] if r["relation"] == "B(a)*"]
    assert len(printed) == 1 and not printed[0]["holds"] and "x+1" in printed[0]["note"]


@pytest.mark.parametrize("argv", [
    ("count",), ("count", "--k", "-1"), ("nope",), ("paths", "--k", "2", "--shape", "1,2"),
    ("rsk", "--diagram", "/nonexistent.json"), ("mult", "--k", "2"),
    ("mult", "--k", "2", "--word", "q1"), ("tensor", "--k", "9", "--n", "9"),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_bad_diagram_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 2, "edges": [["t1", "t1"]]}')
    assert call("render", "--diagram", str(bad))[0] == 2


def test_failed_verification_exit_code():
    code, out, _ = call("seminormal", "--k", "2", "--x", "2")
    assert code == 1 and "FAIL" in out


def test_mult_files(tmp_path):
    t1 = tmp_path / "t1.json"
    t1.write_text('{"k": 2, "edges": [["t1", "t2"], ["b1", "b2"]]}')
    code, out, _ = call("mult", "--diagram", str(t1), "--diagram", str(t1), "--json")
    data = json.loads(out)
    assert code == 0 and data["loops"] == 1 and data["diagram"]["edges"] == [["t1", "t2"], ["b1", "b2"]]


def test_mult_word():
    code, out, _ = call("mult", "--k", "2", "--word", "p1 t1 p1", "--json")
    data = json.loads(out)
    assert code == 0 and data["diagram"]["edges"] == []


def test_enumerate_family():
    code, out, _ = call("enumerate", "--k", "2", "--family", "temperley_lieb")
    assert code == 0 and len(out.splitlines()) == 2


def test_bratteli_and_paths():
    assert "(1):6" in call("bratteli", "--k", "3")[1]
    code, out, _ = call("paths", "--k", "4", "--shape", "2,1", "--json")
    assert code == 0 and len(json.loads(out)) == 8


def test_esk_exact():
    code, out, _ = call("esk", "--shape", "2", "--x", "3.5", "--json")
    data = json.loads(out)
    assert code == 0
    assert Fraction(data["value"]) == (Fraction(7, 2) + 2) * (Fraction(7, 2) - 1) / 2


def test_tensor_and_seminormal_pass():
    assert call("tensor", "--k", "2", "--n", "2")[0] == 0
    assert call("tensor", "--k", "2", "--n", "2", "--exact", "--samples", "5")[0] == 0
    assert call("seminormal", "--k", "3", "--x", "7.3")[0] == 0


def test_seminormal_csv(tmp_path):
    target = tmp_path / "m.csv"
    code, _, _ = call("seminormal", "--k", "2", "--shape", "", "--csv", str(target))
    assert code == 0
    assert target.read_text().startswith("# shape=∅ k=2")


def test_render_formats(example4_path):
    code, out, _ = call("render", "--diagram", str(example4_path), "--format", "svg")
    assert code == 0 and out.count("data-edge=") == 5


def test_out_file(tmp_path):
    target = tmp_path / "o.txt"
    assert call("count", "--k", "2", "--out", str(target)) == (0, "", "")
    assert target.read_text() == "10\n"


def test_json_output_byte_stable():
    a = call("tensor", "--k", "2", "--n", "2", "--seed", "42", "--json")[1]
    b = call("tensor", "--k", "2", "--n", "2", "--seed", "42", "--json")[1]
    assert a == b


def test_suite_small():
    code, out, _ = call("suite", "--k", "2", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and all(r["pass"] for r in data)
    assert [r["claim"] for r in data] == ["counting", "presentation", "tensor", "bratteli",
                                          "rsk", "esk", "seminormal"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rbkit", "count", "--k", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "764\n"
