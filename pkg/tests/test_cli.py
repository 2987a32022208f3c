import json
import subprocess
import sys

import pytest

from sudanlist.cli import EXPERIMENT_HEADER, main, parse_points, run_experiment

from oracles import univariate_list

PLANTED = "0,1 1,1 2,1 3,2 4,4 5,6 6,1"
GRID_TABLE = "1,4,0,2,4,1,3,0,3"  # 1+x1+2*x2 on {0,1,2}^2 with entries 1 and 8 bumped


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_encode_natural(capsys):
    code, out, _ = run(capsys, "encode", "--p", "7", "--d", "1", "--msg", "3,2")
    assert code == 0
    assert out.strip() == ",".join(str((2 * x + 3) % 7) for x in range(7))
    assert out.strip() == "3,5,0,2,4,6,1"


def test_encode_generator_order(capsys):
    code, out, _ = run(capsys, "encode", "--p", "7", "--d", "1", "--msg", "0,1", "--order", "generator")
    assert code == 0 and out.strip() == "0,3,2,6,4,5,1"


def test_encode_zero(capsys):
    assert run(capsys, "encode", "--p", "7", "--d", "1", "--msg", "0,0")[1].strip() == "0,0,0,0,0,0,0"


@pytest.mark.parametrize("argv", [
    ["encode", "--p", "6", "--d", "1", "--msg", "3,2"],
    ["encode", "--p", "7", "--d", "1", "--msg", "3,2,1"],
    ["encode", "--p", "7", "--d", "1", "--msg", "a,b"],
])
def test_encode_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_listdecode_inline(capsys):
    code, out, _ = run(capsys, "listdecode", "--p", "7", "--d", "1", "--t", "4", "--points", PLANTED)
    assert code == 0
    got = json.loads(out)
    assert {"poly": [3, 2], "agreements": 4} in got
    pts = [tuple(map(int, s.split(","))) for s in PLANTED.split()]
    assert [(tuple(c["poly"] + [0] * (2 - len(c["poly"]))), c["agreements"]) for c in got] \
        == univariate_list(7, 1, pts, 4)


def test_listdecode_file(capsys, tmp_path):
    f = tmp_path / "pts.txt"
    f.write_text("\n".join(PLANTED.split()) + "\n")
    code, out, _ = run(capsys, "listdecode", "--p", "7", "--d", "1", "--t", "4", "--points", str(f))
    assert code == 0 and {"poly": [3, 2], "agreements": 4} in json.loads(out)


def test_listdecode_empty(capsys):
    # 7 points on no common line: every line meets them at most twice
    pts = "0,0 1,1 2,4 3,2 4,2 5,4 6,1"  # y = x^2
    code, out, _ = run(capsys, "listdecode", "--p", "7", "--d", "1", "--t", "4", "--points", pts)
    assert code == 1 and json.loads(out) == []


def test_listdecode_t_too_small(capsys):
    code, out, err = run(capsys, "listdecode", "--p", "7", "--d", "1", "--t", "3", "--points", PLANTED)
    assert code == 2 and out == "" and "t_min=4" in err


def test_parse_points_formats():
    assert parse_points("0,1;2,3") == [(0, 1), (2, 3)]
    with pytest.raises(Exception):
        parse_points("0,1,2")


def test_grid(capsys):
    code, out, _ = run(capsys, "grid", "--p", "5", "--H", "0,1,2", "--k", "2", "--d", "1",
                       "--t", "7", "--table", GRID_TABLE)
    assert code == 0
    assert {"poly": "1+x1+2*x2", "agreements": 7} in json.loads(out)


def test_grid_infeasible(capsys):
    code, out, err = run(capsys, "grid", "--p", "5", "--H", "0,1,2", "--k", "2", "--d", "1",
                         "--t", "6", "--table", GRID_TABLE)
    assert code == 2 and out == "" and "h^k = 9" in err


def test_grid_table_mismatch(capsys):
    code, out, _ = run(capsys, "grid", "--p", "5", "--H", "0,1,2", "--k", "2", "--d", "1",
                       "--t", "7", "--table", "1,2,3")
    assert code == 2 and out == ""


def test_experiment(capsys):
    code, out, _ = run(capsys, "experiment", "--p", "7", "--d", "1", "--trials", "10",
                       "--seed", "3", "--emax", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == EXPERIMENT_HEADER
    rows = [line.split(",") for line in lines[1:]]
    assert [int(r[0]) for r in rows] == list(range(8))
    for r in rows[:3]:  # e <= tau_capability = 2
        assert float(r[1]) == 1.0
    for r in rows[:4]:  # within the list radius n - t_min = 3
        assert float(r[2]) == 1.0


def test_experiment_deterministic():
    a = run_experiment(7, 1, 5, 11, 5)
    assert a == run_experiment(7, 1, 5, 11, 5)
    assert a != run_experiment(7, 1, 5, 12, 5)


def test_experiment_budget(capsys):
    code, out, err = run(capsys, "experiment", "--p", "31", "--d", "3", "--trials", "1",
                         "--emax", "1", "--budget", "1000")
    assert code == 2 and out == "" and "budget" in err


def test_help_documents_schema(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    assert EXPERIMENT_HEADER in out and "agreements" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sudanlist", "encode", "--p", "5", "--d", "0", "--msg", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "2,2,2,2,2"
