import json
import subprocess
import sys

import pytest

from pacontract import classify, cli

DISCRETE3 = {"points": ["0", "1", "2"], "dist": [[0, 1, 1], [1, 0, 1], [1, 1, 0]], "s": 1.0}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(line) for line in out.splitlines()]


@pytest.fixture
def files(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
        return str(path)
    return write


def test_validate_discrete(capsys, files):
    code, out, _ = run(capsys, "validate", files("s.json", DISCRETE3))
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] and doc["s_min"] == 1.0


def test_validate_asymmetric(capsys, files):
    bad = {"dist": [[0, 1], [2, 0]], "s": 1.0}
    code, out, _ = run(capsys, "validate", files("s.json", bad))
    assert code == 1
    doc = json.loads(out)
    assert not doc["valid"] and doc["violations"][0]["axiom"] == "symmetry"


def test_validate_computes_s_when_absent(capsys, files):
    code, out, _ = run(capsys, "validate", files("s.json", {"dist": [[0, 1, 4], [1, 0, 1], [4, 1, 0]]}))
    assert code == 0 and json.loads(out)["s"] == 2.0


@pytest.mark.parametrize("content", ["{not json", json.dumps([1, 2]),
                                     json.dumps({"dist": [[0, -1], [-1, 0]]})])
def test_validate_bad_input(capsys, files, content):
    code, out, _ = run(capsys, "validate", files("s.json", content))
    assert code == 2 and out == ""


def test_validate_missing_file(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", str(tmp_path / "nope.json"))
    assert code == 2 and out == ""


def test_classify_staircase(capsys, files):
    code, out, _ = run(capsys, "classify", files("s.json", DISCRETE3),
                       files("m.json", {"table": [1, 2, 2]}))
    assert code == 0
    doc = json.loads(out)
    assert doc["pa"]["alpha_min"] == 0.5 and doc["pa"]["n_min"] == 2
    assert not doc["banach"]["is_member"] and not doc["kannan"]["is_member"]


def test_classify_constant(capsys, files):
    code, out, _ = run(capsys, "classify", files("s.json", DISCRETE3),
                       files("m.json", {"table": [0, 0, 0]}))
    doc = json.loads(out)
    assert code == 0
    assert doc["banach"]["is_member"] and doc["kannan"]["is_member"] and doc["pa"]["is_member"]


def test_classify_identity(capsys, files):
    space = {"dist": [[0, 1], [1, 0]]}
    code, out, _ = run(capsys, "classify", files("s.json", space), files("m.json", {"table": [0, 1]}))
    doc = json.loads(out)
    assert code == 0
    assert not (doc["banach"]["is_member"] or doc["kannan"]["is_member"] or doc["pa"]["is_member"])
    assert doc["kannan"]["beta_min"] == "inf"


@pytest.mark.parametrize("table", [[1, 2, 3], [0, 1]])
def test_classify_bad_map(capsys, files, table):
    code, out, _ = run(capsys, "classify", files("s.json", DISCRETE3), files("m.json", {"table": table}))
    assert code == 2 and out == ""


def test_census_discrete_three(capsys):
    code, out, _ = run(capsys, "census", "--n", "3", "--kind", "discrete")
    docs = lines(out)
    records = [d["record"] for d in docs if "record" in d]
    assert code == 0 and len(records) == 27
    summary = docs[-1]["census"]
    assert summary["counts"]["pa_not_banach"] >= 1 and summary["counts"]["banach_not_pa"] == 0
    assert [1, 2, 2] in [r["table"] for r in records if r["cell"] == "--P"]


def test_census_single_point(capsys):
    code, out, _ = run(capsys, "census", "--n", "1")
    assert code == 0 and sum("record" in d for d in lines(out)) == 1


def test_census_guard(capsys):
    code, out, _ = run(capsys, "census", "--n", "7")
    assert code == 2 and out == ""


def test_census_is_byte_deterministic(capsys):
    _, a, _ = run(capsys, "census", "--n", "3", "--kind", "random", "--p", "2", "--seed", "9")
    _, b, _ = run(capsys, "census", "--n", "3", "--kind", "random", "--p", "2", "--seed", "9")
    assert a == b


def test_solve_halving(capsys):
    code, out, _ = run(capsys, "solve", "--map-expr", "x/2", "--metric-power", "2", "--s", "2",
                       "--alpha", "0.25", "--x0", "1", "--tol", "1e-12")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "converged"
    assert doc["certificate"]["certified"] and abs(doc["point"]) < 1e-6


def test_solve_identity(capsys):
    code, out, _ = run(capsys, "solve", "--map-expr", "x")
    doc = json.loads(out)
    assert code == 0 and doc["residual_trace"][0] == 0 and doc["status"] == "converged"


def test_solve_runs_out(capsys):
    code, out, _ = run(capsys, "solve", "--map-expr", "x+1", "--stop-rule", "residual",
                       "--max-iter", "5")
    assert code == 1 and json.loads(out)["status"] == "max_iter_reached"


@pytest.mark.parametrize("argv", [
    ["--map-expr", "x**2"],
    ["--map-expr", "import os"],
    ["--map-expr", "y + 1"],
    ["--map-expr", "(x"],
    ["--map-expr", "x/2", "--metric-power", "2", "--s", "2", "--alpha", "0.5"],
])
def test_solve_bad_input(capsys, argv):
    code, out, _ = run(capsys, "solve", *argv)
    assert code == 2 and out == ""


@pytest.mark.parametrize("text,x,want", [
    ("x/2", 3.0, 1.5), ("1 - x * 0.5", 2.0, 0.0), ("-(x + 1) / 4", 3.0, -1.0),
    ("x × 3 ÷ 2", 2.0, 3.0), ("2", 100.0, 2.0),
])
def test_map_expression_grammar(text, x, want):
    assert cli.parse_map_expr(text)(x) == want


def test_reproduce_lists_every_check(capsys):
    code, out, err = run(capsys, "reproduce")
    doc = json.loads(out)
    names = [c["name"] for c in doc["checks"]]
    assert len(names) == 8
    assert doc["checks"][0]["alpha_min"] == 0.5
    assert code == (0 if doc["passed"] else 1)
    assert err.count("PASS") + err.count("FAIL") == 8


def test_reproduce_fresh_build_passes(capsys):
    code, out, _ = run(capsys, "paper")
    failed = [c["name"] for c in json.loads(out)["checks"] if not c["passed"]]
    assert code == 0, failed


def test_reproduce_detects_corruption(capsys, monkeypatch):
    real = classify.pa_minimal_alpha

    def corrupted(space, fmap):
        pa = real(space, fmap)
        return classify.PAModulus(pa.is_member, pa.alpha_min * 0.9, pa.n_min, pa.witness,
                                  pa.alpha_min_exact * classify.Fraction(9, 10))

    monkeypatch.setattr(classify, "pa_minimal_alpha", corrupted)
    code, out, _ = run(capsys, "reproduce")
    assert code == 1 and not json.loads(out)["checks"][0]["passed"]


def test_module_entry_point(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(DISCRETE3))
    proc = subprocess.run([sys.executable, "-m", "pacontract", "validate", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["valid"]
