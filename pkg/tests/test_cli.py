import json
import subprocess
import sys

import pytest

from lrbquiver.cli import main

from conftest import DATA


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_free3_quiver_dot(capsys):
    code, out, _ = run(capsys, "--free", "3", "quiver", "--dot")
    assert code == 0
    assert out.count("label=") == 8
    assert out.count("->") == 8


def test_dot_is_default_and_deterministic(capsys):
    _, a, _ = run(capsys, "--free", "3", "quiver")
    _, b, _ = run(capsys, "--free", "3", "quiver", "--dot")
    assert a == b


def test_quiver_matrix(capsys):
    code, out, _ = run(capsys, "--braid", "3", "quiver", "--matrix")
    data = json.loads(out)
    assert code == 0 and len(data["labels"]) == 5 and sum(map(sum, data["arrows"])) == 6


def test_quiver_check(capsys):
    code, out, _ = run(capsys, "--free", "3", "quiver", "--check")
    assert code == 0 and "FAIL" not in out and out.strip().endswith("pairs")


def test_braid3_cartan_csv(capsys):
    code, out, _ = run(capsys, "--braid", "3", "cartan", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert len(rows) == 6 and len(rows[0]) == 6
    m = [[int(v) for v in r[1:]] for r in rows[1:]]
    assert all(m[i][i] == 1 for i in range(5))
    assert m[0][4] == 2


def test_cartan_json_check(capsys):
    code, out, _ = run(capsys, "--free", "3", "cartan", "--format", "json", "--check")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("PASS")
    assert json.loads(lines[1])["matrix"][0][-1] == 2


def test_validate_bad_table(capsys):
    code, out, _ = run(capsys, "--table", str(DATA / "bad_lrb2.json"), "validate")
    assert code == 1
    assert "LRB2" in out and "(a, b)" in out


def test_non_lrb_rejected_elsewhere(capsys):
    code, _, err = run(capsys, "--table", str(DATA / "bad_lrb2.json"), "quiver")
    assert code == 2 and "LRB2" in err


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "--free", "7", "validate")[0] == 2
    assert run(capsys, "--table", str(tmp_path / "missing.json"), "validate")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"size": 2}')
    assert run(capsys, "--table", str(bad), "validate")[0] == 2
    assert run(capsys, "quiver")[0] == 2


def test_unsafe_size(capsys):
    code, out, _ = run(capsys, "--unsafe-size", "--braid", "2", "validate")
    assert code == 0


def test_lattice_outputs(capsys):
    code, out, _ = run(capsys, "--free", "3", "lattice")
    assert code == 0 and out.count("->") == 12
    code, out, _ = run(capsys, "--free", "3", "lattice", "--json")
    data = json.loads(out)
    assert len(data["leq"]) == 8 and data["leq"][0] == [1] * 8


def test_idempotents(capsys):
    code, out, _ = run(capsys, "--free", "2", "idempotents")
    assert code == 0
    assert "e[ab] = ab" in out and "e[a] = a - ab" in out
    code, out, _ = run(capsys, "--free", "2", "idempotents", "--json", "--reps", "uniform")
    data = json.loads(out)
    assert data["ab"] == [["ab", "1/2"], ["ba", "1/2"]]


def test_out_file(capsys, tmp_path):
    p = tmp_path / "q.dot"
    code, out, _ = run(capsys, "--free", "2", "quiver", "--out", str(p))
    assert code == 0 and out == "" and p.read_text().startswith("digraph")


@pytest.mark.parametrize("args", [
    ["--free", "3"], ["--braid", "3"], ["--boolean", "2"],
    ["--arrangement", str(DATA / "three_lines.json")],
    ["--arrangement", str(DATA / "braid3_normals.json")],
    ["--arrangement", str(DATA / "generic_lines.json")],
    ["--table", str(DATA / "free2_table.json")],
])
def test_check_bundled(capsys, args):
    code, out, _ = run(capsys, *args, "check")
    assert code == 0, out
    assert "FAIL" not in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "lrbquiver", "--free", "2", "validate"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("ok")
