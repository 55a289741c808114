import json
import subprocess
import sys

import pytest

from quandle_delta.cli import (
    EXIT_FAILED,
    EXIT_LIMIT,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_range,
    read_scan_csv,
    run,
    scan_csv,
    UsageError,
)


def run_json(*argv):
    status, out = run(list(argv))
    return status, json.loads(out)


def test_table_e_basis():
    status, doc = run_json("table", "dihedral:8", "--basis", "e")
    assert status == EXIT_OK
    entries = doc["results"]["entries"]
    assert entries[0][0] == "e1 - e2 - e7"
    assert all(row[3] == "0" for row in entries)
    assert doc["schema_version"] == 1
    assert doc["command"] == {"command": "table", "quandle": "dihedral:8", "basis": "e"}


def test_table_trivial_a_basis():
    _, doc = run_json("table", "trivial:3", "--basis", "a")
    assert doc["results"]["coords"] == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]
    assert doc["results"]["entries"][1] == ["a1", "a1", "a1"]


def test_table_text_is_aligned():
    status, out = run(["table", "dihedral:8", "--basis", "e", "--format", "text"])
    lines = out.splitlines()
    assert "e1 - e2 - e7" in lines[2]
    assert len(lines) == 1 + 1 + 7


@pytest.mark.parametrize(
    "sel, k, free_rank, torsion",
    [("dihedral:8", 2, 0, [4, 4]), ("dihedral:3", 1, 0, [3]), ("dihedral:8", 1, 1, [4])],
)
def test_quotient(sel, k, free_rank, torsion):
    status, doc = run_json("quotient", sel, "--k", str(k))
    assert status == EXIT_OK
    q = doc["results"]["quotient"]
    assert (q["free_rank"], q["torsion"]) == (free_rank, torsion)


def test_quotient_r8_bases_and_order():
    _, doc = run_json("quotient", "dihedral:8", "--k", "2", "--mode", "two-sided")
    assert doc["results"]["quotient"]["order"] == 16
    assert doc["command"]["mode"] == "two_sided"
    assert doc["results"]["delta_k"][-1] == [0, 0, 0, 0, 0, 4, 0]


def test_verify_paper():
    status, doc = run_json("verify-paper")
    assert status == EXIT_OK
    res = doc["results"]
    assert res["passed"]
    assert res["theorem"]["quotient"]["structure"] == "Z_4 (+) Z_4"
    assert res["lemmas"]["violations"] == []
    assert res["lemmas"]["n_values"] == list(range(4, 25, 2))
    assert len(doc["errata"]) == 2
    status, out = run(["verify-paper", "--format", "text"])
    assert "Z_4 (+) Z_4" in out and "FAIL" not in out


def test_verify_paper_failure_exit(monkeypatch):
    from quandle_delta import lab

    real = lab.verify_theorem_r8

    def broken():
        rep = real()
        rep.steps[-1].passed = False
        return rep

    monkeypatch.setattr(lab, "verify_theorem_r8", broken)
    assert main(["verify-paper"]) == EXIT_FAILED


def test_scan_json_csv_agree():
    _, doc = run_json("scan", "--n", "3..9", "--k", "1..3")
    rows = {(r["n"], r["k"]): r for r in doc["results"]["rows"]}
    assert rows[8, 2]["order"] == 16 and rows[8, 2]["verdict"] == "counterexample"
    assert rows[7, 2]["torsion"] == [7] and rows[7, 2]["verdict"] == "consistent"
    assert rows[4, 2]["order"] == 4 and rows[4, 2]["verdict"] == "consistent"
    status, text = run(["scan", "--n", "3..9", "--k", "1..3", "--format", "csv"])
    assert status == EXIT_OK
    from_csv = read_scan_csv(text)
    keep = ("n", "k", "mode", "free_rank", "torsion", "order", "clause", "verdict")
    assert from_csv == [{c: r[c] for c in keep} for r in doc["results"]["rows"]]
    assert text == scan_csv(doc)


def test_scan_limit_exit_codes():
    status, doc = run_json("scan", "--n", "3..4", "--k", "1..2", "--limit", "1")
    assert status == EXIT_LIMIT
    assert all(r["verdict"] == "not_computed" for r in doc["results"]["rows"])
    status, doc = run_json("scan", "--n", "3..4", "--k", "1..2", "--limit", "6")
    assert status == EXIT_OK
    assert [r["verdict"] for r in doc["results"]["rows"]].count("not_computed") == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "dihedral:8", "--basis", "e"],
        ["quotient", "dihedral:6", "--k", "2"],
        ["verify-paper", "--n-max", "8"],
        ["scan", "--n", "3..6", "--k", "1..2"],
    ],
)
def test_json_roundtrip_and_determinism(argv):
    _, first = run(argv)
    _, second = run(argv)
    a, b = json.loads(first), json.loads(second)
    assert json.loads(json.dumps(a)) == a
    a.pop("timing"), b.pop("timing")
    assert a == b


def test_validate(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"name": "t2", "order": 2, "table": [[0, 0], [1, 1]]}))
    status, doc = run_json("validate", str(good))
    assert status == EXIT_OK and doc["results"]["valid"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "b", "order": 2, "table": [[1, 0], [1, 0]]}))
    status, doc = run_json("validate", str(bad))
    assert status == EXIT_FAILED
    assert "IdempotencyViolation(0)" in doc["results"]["violations"]


def test_file_selector_errors_surface(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "b", "order": 2, "table": [[1, 0], [1, 0]]}))
    assert main(["table", f"file:{bad}"]) == EXIT_USAGE
    assert "IdempotencyViolation(0)" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["quotient", "dihedral:8", "--k", "0"],
        ["quotient", "bogus:8", "--k", "1"],
        ["scan", "--n", "9..3", "--k", "1..2"],
        ["scan", "--n", "1..3", "--k", "1..2"],
        ["scan", "--n", "a..b", "--k", "1..2"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["quotient", "dihedral:8"])
    assert info.value.code == EXIT_USAGE


def test_parse_range():
    assert parse_range("3..12") == (3, 12)
    assert parse_range("5") == (5, 5)
    with pytest.raises(UsageError):
        parse_range("4..2")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quandle_delta", "quotient", "dihedral:8", "--k", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["results"]["quotient"]["order"] == 16
