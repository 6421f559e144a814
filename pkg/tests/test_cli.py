import json
import subprocess
import sys
from pathlib import Path

import pytest

from rootlat.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- field


@pytest.mark.parametrize("gens, degree, modulus, order", [
    ("14,15", 24, 420, 4), ("", 1, 1, 1), ("210", 48, 420, 2)])
def test_field(capsys, gens, degree, modulus, order):
    code, out, _ = run(capsys, "field", "--gens", gens)
    assert code == 0
    lines = dict(line.split(": ") for line in out.strip().splitlines())
    assert lines["degree"] == str(degree)
    assert lines["modulus"] == str(modulus)
    assert lines["subgroup_order"] == str(order)


@pytest.mark.parametrize("gens", ["1", "0,5", "a,b", "3,-4"])
def test_field_invalid_gens(capsys, gens):
    code, out, err = run(capsys, "field", "--gens", gens)
    assert code == 2 and out == "" and err.startswith("error:")


# ---------------------------------------------------------------- qgraph


def test_qgraph_json(capsys):
    _, out, _ = run(capsys, "qgraph", "--gens", "14,15")
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3, 5, 7, 14, 15]
    assert doc["edges"] == [[2, 14], [3, 15], [5, 15], [7, 14]]
    assert doc["components"] == [[2, 7, 14], [3, 5, 15]]
    _, out, _ = run(capsys, "qgraph", "--gens", "210")
    assert len(json.loads(out)["vertices"]) == 15
    _, out, _ = run(capsys, "qgraph", "--gens", "")
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3] and doc["edges"] == []


def test_qgraph_dot(capsys):
    _, out, _ = run(capsys, "qgraph", "--gens", "14,15", "--format", "dot")
    assert out.splitlines()[0] == "digraph QK {"
    assert "  15 [shape=circle];" in out and "  5 [shape=doublecircle];" in out
    assert out.count(" -> ") == 4


# ---------------------------------------------------------------- classify


@pytest.mark.parametrize("gens, name", [("14,15", "classify_14_15.json"), ("210", "classify_210.json")])
def test_classify_golden(capsys, gens, name):
    _, out, _ = run(capsys, "classify", "--gens", gens)
    assert out == (GOLDEN / name).read_text()


def test_classify_content(capsys):
    _, out, _ = run(capsys, "classify", "--gens", "14,15")
    doc = json.loads(out)
    assert doc["tool"] == "rootlat" and doc["input"] == {"gens": [14, 15], "nmax": 8}
    irr = [c["label"] for c in doc["rank2"] if c["label"] != "A1xA1"]
    assert irr == ["I2(3)", "I2(5)", "I2(7)", "I2(14)", "I2(15)"]
    _, out, _ = run(capsys, "classify", "--gens", "")
    doc = json.loads(out)
    assert [c["label"] for c in doc["rank2"]] == ["A1xA1", "I2(3)"]
    assert doc["rank_ge3"] == {"A": True, "B": False, "D": True, "E": True, "F": False, "H": False}


def test_classify_nmax(capsys):
    _, out, _ = run(capsys, "classify", "--gens", "5", "--nmax", "4")
    types = json.loads(out)["rank_ge3_types"]
    assert set(types) == {"A3", "A4", "B3", "B4", "D4", "F4", "H3", "H4"}
    code, _, _ = run(capsys, "classify", "--nmax", "2")
    assert code == 2


def test_determinism(capsys):
    outs = {run(capsys, "classify", "--gens", "15,14")[1] for _ in range(3)}
    assert len(outs) == 1


# ---------------------------------------------------------------- roots


@pytest.mark.parametrize("t, count", [("E8", 240), ("H4", 120), ("A2", 6), ("I2(7)", 14), ("B_3", 18)])
def test_roots_count(capsys, t, count):
    code, out, _ = run(capsys, "roots", "--type", t, "--emit", "count")
    assert code == 0 and out == f"{count}\n"


def test_roots_list(capsys):
    _, out, _ = run(capsys, "roots", "--type", "A2", "--emit", "list")
    doc = json.loads(out)
    assert doc["count"] == 6
    assert sorted(map(tuple, doc["roots"])) == sorted(
        [("1", "0"), ("0", "1"), ("1", "1"), ("-1", "0"), ("0", "-1"), ("-1", "-1")])


def test_roots_with_field_context(capsys):
    _, out, _ = run(capsys, "roots", "--type", "I2(14)", "--gens", "14,15", "--emit", "count")
    assert out == "28\n"
    _, out, _ = run(capsys, "roots", "--type", "I2(10)", "--gens", "210", "--emit", "count")
    assert out == "420\n"
    _, out, _ = run(capsys, "roots", "--type", "I2(3)", "--gens", "", "--emit", "count")
    assert out == "6\n"
    code, _, _ = run(capsys, "roots", "--type", "I2(4)", "--gens", "14,15")
    assert code == 4
    _, out, _ = run(capsys, "roots", "--type", "I2(4)", "--gens", "4", "--emit", "count")
    assert out == "8\n"
    assert run(capsys, "roots", "--type", "E8", "--gens", "4")[0] == 2


def test_roots_gram_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "roots", "--type", "H3", "--emit", "list")
    first = json.loads(out)
    path = tmp_path / "h3.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "roots", "--gram", str(path), "--emit", "list")
    assert code == 0
    second = json.loads(out2)
    assert second["roots"] == first["roots"] and second["gram"] == first["gram"]
    assert second["count"] == 30


def test_roots_gram_expressions(capsys, tmp_path):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"gram": [["2", "-sqrt(2)"], ["-sqrt(2)", "2"]]}))
    _, out, _ = run(capsys, "roots", "--gram", str(path))
    assert out == "8\n"


def test_roots_errors(capsys, tmp_path):
    assert run(capsys, "roots", "--type", "E8", "--cap", "50")[0] == 3
    path = tmp_path / "affine.json"
    path.write_text(json.dumps({"gram": [["2", "-2"], ["-2", "2"]]}))
    assert run(capsys, "roots", "--gram", str(path), "--cap", "200")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"gram": [["2", "cos(pi/"]]}')
    assert run(capsys, "roots", "--gram", str(bad))[0] == 2
    assert run(capsys, "roots", "--gram", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "roots", "--type", "E9")[0] == 2
    assert run(capsys, "roots")[0] == 2


# ---------------------------------------------------------------- extend


def test_extend(capsys):
    _, out, _ = run(capsys, "extend", "14,15", "210")
    rows = {(r["from"], r["to"]) for r in json.loads(out)["map"]}
    assert rows == {("A1xA1", "A1xA1"), ("I2(3)", "I2(3)"), ("I2(5)", "I2(5)"), ("I2(7)", "I2(7)"),
                    ("I2(14)", "I2(210)"), ("I2(15)", "I2(210)")}
    _, out, _ = run(capsys, "extend", "", "14,15")
    rows = {(r["from"], r["to"]) for r in json.loads(out)["map"]}
    assert ("I2(3)", "I2(3)") in rows
    code, out, _ = run(capsys, "extend", "210", "14,15")
    assert code == 4 and out == ""


# ---------------------------------------------------------------- kronecker


@pytest.mark.parametrize("expr, expected", [
    ("cos(pi*1/7)*2", "TwoCos(1,7)"),
    ("sqrt(2)", "TwoCos(1,4)/SmallSet(sqrt(2))"),
    ("3", "None"),
    ("z(7)", "RootOfUnity(7)"),
    ("-z(3)", "RootOfUnity(6)"),
])
def test_kronecker(capsys, expr, expected):
    code, out, _ = run(capsys, "kronecker", expr)
    assert code == 0 and out.strip() == expected


def test_kronecker_errors(capsys):
    assert run(capsys, "kronecker", "1/2")[0] == 5
    assert run(capsys, "kronecker", "1/0")[0] == 5
    assert run(capsys, "kronecker", "cos(pi/")[0] == 2


# ---------------------------------------------------------------- plumbing


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "--out", str(path), "classify", "--gens", "14,15")
    assert code == 0 and out == ""
    assert path.read_text() == (GOLDEN / "classify_14_15.json").read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rootlat", "roots", "--type", "F4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "48\n"
    proc = subprocess.run([sys.executable, "-m", "rootlat", "extend", "210", "14,15"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 4
