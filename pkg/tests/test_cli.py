import json
import subprocess
import sys

import pytest

from freiman.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_doubling(capsys):
    assert run(capsys, "doubling", "0,1,2,3,4,7,14,28") == (0, "26\n", "")


def test_sumset(capsys):
    code, out, _ = run(capsys, "sumset", "{0,1,3}", "0,1,3")
    assert code == 0 and out == "{0,1,2,3,4,6}\n"


def test_iso_negative_exit_1(capsys):
    code, out, _ = run(capsys, "iso", "0,1,2", "0,1,3")
    assert code == 1 and out.strip() == "not isomorphic"


def test_iso_positive(capsys):
    code, out, _ = run(capsys, "--json", "iso", "0,1,2", "10,13,16")
    assert code == 0
    assert json.loads(out) == {"isomorphic": True, "witness": [0, 1, 2],
                               "mapping": [[0, 10], [1, 13], [2, 16]]}


def test_dim_json(capsys):
    code, out, _ = run(capsys, "--json", "dim", "0,1,3")
    d = json.loads(out)
    assert code == 0 and d["dimension"] == 2 and len(d["model"]) == 3


def test_volume(capsys):
    code, out, _ = run(capsys, "--json", "volume", "0,1,2,3,4,7,14,28", "--bound", "40")
    d = json.loads(out)
    assert code == 0 and d["V"] == 29 and d["exhausted_bound"] == 27


def test_volume_bound_exceeded_and_wrong_dimension(capsys):
    assert run(capsys, "volume", "0,1,2,4,8", "--bound", "5")[0] == 1
    code, _, err = run(capsys, "volume", "0,1,3", "--bound", "10")
    assert code == 2 and "dimension 1" in err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--k", "8", "--c", "4", "--b", "2")
    assert code == 0 and out.splitlines() == ["{0,1,2,3,4,7,14,28}", "T=26 V=29"]
    code, out, _ = run(capsys, "--json", "construct", "--k", "6", "--c", "3", "--b", "1", "--d", "2")
    d = json.loads(out)
    assert d["T"] == d["T_brute"] == 18


def test_construct_range_error_cites_constraint(capsys):
    code, _, err = run(capsys, "construct", "--k", "6", "--c", "4", "--b", "5")
    assert code == 2 and "0 <= b <= k-c-1" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--k", "8", "--m", "6", "--b", "2")
    lines = out.splitlines()
    summary = json.loads(lines[-1])
    assert code == 0 and len(lines) == 21
    assert summary["count"] == 20 and summary["T"] == [26] and summary["max"] == [28]
    assert "0,1,2,3,4,7,14,28" in lines


def test_lemma(capsys):
    code, out, _ = run(capsys, "lemma", "0,1,3")
    assert code == 0 and "holds" in out


@pytest.mark.parametrize("argv", [["doubling", "3,1"], ["dim", "a,b"], ["sumset", "{}", "1"]])
def test_malformed_input_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_unknown_subcommand_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_knapsack(tmp_path, capsys):
    f = tmp_path / "inst.json"
    f.write_text('{"a": [3, 5, 7], "b": 12}')
    code, out, _ = run(capsys, "knapsack", str(f))
    assert code == 0 and json.loads(out) == {"feasible": True, "selection": [1, 2], "values": [5, 7]}
    f.write_text("2 4 6\n7\n")
    code, out, _ = run(capsys, "knapsack", str(f))
    assert code == 1 and json.loads(out) == {"feasible": False, "selection": []}
    assert run(capsys, "knapsack", str(tmp_path / "missing"))[0] == 2


def test_knapsack_stdin():
    proc = subprocess.run([sys.executable, "-m", "freiman", "knapsack", "-"],
                          input="3 5 7 12", capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["selection"] == [1, 2]


def test_scan_reports(capsys):
    code, out, _ = run(capsys, "scan", "hypothesis", "--k", "4", "--bound", "9")
    d = json.loads(out)
    assert code == 0 and d["violations"] == [] and "elapsed_ms" not in d
    code, out, _ = run(capsys, "scan", "hypothesis", "--k", "4", "--bound", "9", "--timing")
    assert "elapsed_ms" in json.loads(out)
    code, out, _ = run(capsys, "scan", "dim1", "--k", "4", "--bound", "9")
    assert code == 0 and json.loads(out)["violations"] == []
