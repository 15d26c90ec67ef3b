import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from svf.cli import main

PARAMS = Path(__file__).resolve().parent.parent / "params"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def write_params(tmp_path, **fields):
    base = {
        "c": "1",
        "u": [],
        "v": [],
        "vectors": {"n": ["1", "1"], "e": ["1", "1"], "s": ["1", "1"], "w": ["1", "1"]},
    }
    base.update(fields)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(base))
    return str(path)


@pytest.mark.parametrize(
    "quantity, method, fname, value",
    [
        ("triangular", "factorized", "triangular_n2.json", "8"),
        ("triangular", "contraction", "triangular_n2.json", "8"),
        ("gdw", "determinant", "z11_ones.json", "8"),
        ("z11", "factorized", "z11_ones.json", "8"),
        ("efp", "determinant", "efp_n1_m1.json", "1/2"),
        ("efp", "components", "efp_n1_m1.json", "1/2"),
        ("gamma", "factorized", "efp_n1_m1.json", "1"),
    ],
)
def test_eval_golden(capsys, quantity, method, fname, value):
    code, out = run(capsys, "eval", quantity, "--method", method, "--params", str(PARAMS / fname))
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == value
    assert doc["quantity"] == quantity and doc["method"] == method
    assert "float" not in doc and "params" in doc


def test_eval_all_gdw_routes_agree_on_dwbc(capsys):
    values = set()
    for method in ("contraction", "subset-sum", "determinant"):
        code, out = run(capsys, "eval", "gdw", "--method", method, "--params", str(PARAMS / "ordinary_dwbc.json"))
        assert code == 0
        values.add(json.loads(out)["value"])
    assert len(values) == 1


def test_eval_trapezoid_routes(capsys):
    outs = [
        json.loads(run(capsys, "eval", "trapezoid", "--method", m, "--params", str(PARAMS / "trapezoid_n2_m2.json"))[1])["value"]
        for m in ("contraction", "factorized")
    ]
    assert outs[0] == outs[1]


def test_eval_float(capsys):
    code, out = run(capsys, "eval", "efp", "--params", str(PARAMS / "efp_n1_m1.json"), "--float", "--digits", "4")
    assert code == 0
    assert json.loads(out)["float"] == "0.5"


def test_eval_pole_exit_code(capsys, tmp_path):
    path = write_params(tmp_path, u=["2", "2"], v=["0", "1"])
    code, out = run(capsys, "eval", "gdw", "--method", "subset-sum", "--params", path)
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "pole" and doc["factor"] == "u_1 - u_2"


def test_eval_degeneracy_exit_code(capsys, tmp_path):
    path = write_params(tmp_path, vectors={"n": ["1", "1"], "e": ["1", "-1"], "s": ["1", "1"], "w": ["1", "1"]})
    code, out = run(capsys, "eval", "beta", "--params", path)
    assert code == 2
    assert json.loads(out)["error"] == "degeneracy"


@pytest.mark.parametrize(
    "fields",
    [
        {"c": "0"},
        {"c": "1.5"},
        {"u": ["1/0"]},
        {"u": [1]},
        {"vectors": {"n": ["1", "1"], "e": ["1", "1"], "s": ["1", "1"]}},
        {"vectors": {"n": ["1"], "e": ["1", "1"], "s": ["1", "1"], "w": ["1", "1"]}},
    ],
)
def test_eval_bad_input(capsys, tmp_path, fields):
    code, out = run(capsys, "eval", "triangular", "--params", write_params(tmp_path, **fields))
    assert code == 1
    assert json.loads(out)["error"] == "input"


def test_eval_bad_method_and_range(capsys, tmp_path):
    assert run(capsys, "eval", "triangular", "--method", "determinant", "--params", str(PARAMS / "triangular_n2.json"))[0] == 1
    path = write_params(tmp_path, u=["1", "2"], v=["0"])
    assert run(capsys, "eval", "gdw", "--method", "determinant", "--params", path)[0] == 1
    assert run(capsys, "eval", "efp", "--params", write_params(tmp_path, v=["0"], split=[1, 1]))[0] == 1
    assert run(capsys, "eval", "nonsense", "--params", path)[0] == 1


def test_verify_report(capsys):
    code, out = run(capsys, "verify", "--suite", "yang-baxter", "--trials", "100", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["passes"] == doc["trials"] == 100 and doc["failures"] == []


def test_verify_vanishing(capsys):
    code, out = run(capsys, "verify", "--suite", "triangular-vanishing", "--trials", "50", "--seed", "1", "--max-n", "6")
    assert code == 0 and json.loads(out)["passes"] == 50


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 1
    assert run(capsys, "verify", "--suite", "unitarity", "--max-n", "40")[0] == 1


def _strip_elapsed(doc):
    if isinstance(doc, dict):
        return {k: _strip_elapsed(v) for k, v in doc.items() if k != "elapsed"}
    if isinstance(doc, list):
        return [_strip_elapsed(x) for x in doc]
    return doc


def test_verify_deterministic(capsys):
    a = json.loads(run(capsys, "verify", "--suite", "gdw-triple-equality", "--trials", "10", "--seed", "3")[1])
    b = json.loads(run(capsys, "verify", "--suite", "gdw-triple-equality", "--trials", "10", "--seed", "3")[1])
    assert _strip_elapsed(a) == _strip_elapsed(b)


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


@pytest.mark.parametrize(
    "quantity, sizes, method, count",
    [("triangular", "2..8", "contraction", 7), ("gdw", "2..5", "determinant", 4), ("gdw", "2..5", "subset-sum", 4),
     ("trapezoid", "1..4", "factorized", 4), ("efp", "1..3", "components", 3)],
)
def test_bench_rows(capsys, quantity, sizes, method, count):
    code, out = run(capsys, "bench", "--quantity", quantity, "--sizes", sizes, "--method", method)
    assert code == 0
    rows = _rows(out)
    assert rows[0] == ["size", "method", "seconds", "max_bits"]
    assert len(rows) == count + 1
    assert all(r[1] == method and int(r[3]) > 0 for r in rows[1:])


def test_bench_out_file(capsys, tmp_path):
    target = tmp_path / "b.csv"
    code, _ = run(capsys, "bench", "--quantity", "gdw", "--sizes", "2..3", "--method", "contraction", "--out", str(target))
    assert code == 0
    assert len(_rows(target.read_text())) == 3


def test_bench_limits(capsys):
    assert run(capsys, "bench", "--quantity", "triangular", "--sizes", "10..13")[0] == 1
    assert run(capsys, "bench", "--quantity", "gdw", "--sizes", "5..2")[0] == 1
    assert run(capsys, "bench", "--quantity", "gdw", "--sizes", "x")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "svf", "eval", "triangular", "--params", str(PARAMS / "triangular_n2.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "8"
