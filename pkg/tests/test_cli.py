import json
import re
import subprocess
import sys

import pytest

from floorsq import golden
from floorsq.cli import canonical_json, main
from floorsq.reproduce import reproduce


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), out


@pytest.mark.parametrize("argv,line", [
    (("residues", "7", "--kind", "r"), "R_7 = {4, 6}"),
    (("residues", "1", "--kind", "q"), "Q_1 = {}"),
    (("residues", "9", "--kind", "r"), "R_9 = {1, 4, 7, 8}"),
    (("residues", "4", "--kind", "a"), "A_4 = {0, 1, 2, 3}"),
])
def test_residues_text(capsys, argv, line):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == line


def test_check(capsys):
    code, out, _ = run(capsys, "check", "7")
    assert code == 0 and out.startswith("a = 7: pass")
    assert "k = 0 (mod 8) -> r = 6" in out and "k = 1 (mod 8) -> r = 4" in out
    code, out, _ = run(capsys, "check", "3")
    assert code == 1 and "blocking class 2" in out
    assert run(capsys, "check", "104")[0] == 0
    assert run(capsys, "check", "2")[0] == 1


def test_represent(capsys):
    code, out, _ = run(capsys, "represent", "7", "1")
    assert code == 0
    assert "r = 4" in out and "triple = (3, 1, 1)" in out and "= 1 + 0 + 0 = 1" in out
    code, out, _ = run(capsys, "represent", "4", "0")
    assert code == 0 and "triple = (0, 0, 0)" in out
    code, out, _ = run(capsys, "represent", "1", "7")
    assert code == 1 and "no admissible r in R_1" in out


def test_represent_oracle(capsys):
    code, out, _ = run(capsys, "represent", "7", "2", "--oracle")
    assert code == 0 and "oracle: (4, 0, 0) -> 2 + 0 + 0 = 2" in out
    code, doc, _ = run_json(capsys, "represent", "7", "2", "--oracle")
    assert doc["result"]["oracle"] == [4, 0, 0]


def test_represent_overflow(capsys):
    code, _, err = run(capsys, "represent", "7", str(2**62))
    assert code == 2 and "64-bit" in err
    code, doc, _ = run_json(capsys, "represent", "7", str(2**62))
    assert code == 2 and doc["status"] == "error"


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "3", "3")
    assert code == 1 and "method_fail (blocking class 2)" in out
    code, out, _ = run(capsys, "scan", "4", "4")
    assert code == 0 and "method_pass" in out and "R_4 = {0, 1, 2, 3}" in out


def test_scan_closure(capsys):
    code, out, _ = run(capsys, "scan", "1", "120", "--assume", "3", "--closure-bound", "120")
    assert code == 0
    assert "closure up to 120 (27 moduli): {" + ", ".join(map(str, golden.CLOSURE_120)) + "}" in out
    assert "NOTE: mod-8 check also passes for {12, 16, 27" in out
    code, doc, _ = run_json(capsys, "scan", "1", "120", "--assume", "3", "--closure-bound", "120")
    assert [e["a"] for e in doc["result"]["closure"]["entries"]] == list(golden.CLOSURE_120)
    assert doc["result"]["closure"]["entries"][0] == {"a": 3, "status": "assumed", "r_set": [1, 2]}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "7", "1000")
    assert code == 0 and "1001/1001 verified" in out
    code, out, _ = run(capsys, "verify", "4", "0")
    assert code == 0 and "1/1 verified" in out
    code, out, _ = run(capsys, "verify", "1", "10")
    assert code == 1 and "failures (1): 7" in out


def test_verify_default_n_max(capsys):
    code, doc, _ = run_json(capsys, "verify", "9")
    assert code == 0 and doc["parameters"]["n_max"] == 10000 and doc["result"]["total"] == 10001


@pytest.mark.parametrize("argv", [
    ("residues", "0"), ("residues", "x"), ("check", "0"), ("check", "-1"), ("represent", "7", "-1"),
    ("scan", "5", "3"), ("scan", "0", "3"), ("verify", "0", "5"), ("residues", "7", "--kind", "z"),
    ("bogus",), (), ("check", str(2**64)),
    ("scan", "1", "10", "--assume", "30", "--closure-bound", "20"),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv,code", [
    (("residues", "7"), 0), (("check", "7"), 0), (("check", "3"), 1), (("represent", "7", "1"), 0),
    (("represent", "1", "7"), 1), (("scan", "4", "4"), 0), (("scan", "3", "3"), 1),
    (("verify", "7", "100"), 0), (("verify", "1", "10"), 1), (("check", "0"), 2),
])
def test_exit_code_matrix(capsys, argv, code):
    assert run(capsys, *argv)[0] == code
    assert run(capsys, *argv, "--json")[0] == code
    quiet_code, out, _ = run(capsys, *argv, "--quiet")
    assert quiet_code == code and out == ""


def test_quiet_prints_nothing(capsys):
    code, out, _ = run(capsys, "--quiet", "check", "7")
    assert code == 0 and out == ""


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "check", "7")
    assert json.loads(out)["command"] == "check"


@pytest.mark.parametrize("argv", [
    ("residues", "24", "--kind", "r"), ("check", "7"), ("check", "3"), ("represent", "7", "1", "--oracle"),
    ("scan", "1", "30", "--assume", "3", "--closure-bound", "60"), ("verify", "1", "40"), ("reproduce",),
])
def test_json_round_trip(capsys, argv):
    _, doc, raw = run_json(capsys, *argv)
    assert canonical_json(json.loads(raw)) + "\n" == raw
    assert doc["schema_version"] == "1" and doc["command"] == argv[0]
    assert doc["status"] in ("ok", "fail")
    assert "." not in re.sub(r'"[^"]*"', "", raw)  # no floats outside strings


def test_text_and_json_agree(capsys):
    _, out, _ = run(capsys, "represent", "20", "77")
    _, doc, _ = run_json(capsys, "represent", "20", "77")
    rep = doc["result"]["representation"]
    assert f"r = {rep['r']}" in out
    assert "triple = ({}, {}, {})".format(*rep["triple"]) in out
    assert " + ".join(map(str, rep["floor_terms"])) in out
    assert [f[1] for f in rep["fractional_parts"]] == [20, 20, 20]
    assert sum(f[0] for f in rep["fractional_parts"]) == rep["r"]

    _, out, _ = run(capsys, "check", "40")
    _, doc, _ = run_json(capsys, "check", "40")
    for entry in doc["result"]["witness"]["entries"]:
        assert f"k = {entry['k_class']} (mod 8) -> r = {entry['r']}" in out

    _, out, _ = run(capsys, "verify", "1", "60")
    _, doc, _ = run_json(capsys, "verify", "1", "60")
    assert ", ".join(map(str, doc["result"]["failures"])) in out
    assert f"{doc['result']['verified']}/{doc['result']['total']}" in out


def test_reproduce_flags_only_row_24(capsys):
    # the published R_24 row omits 18, which the definitions put in R_24
    code, out, err = run(capsys, "reproduce")
    assert code == 1
    mismatches = [l for l in err.splitlines() if l.startswith("MISMATCH")]
    assert mismatches == ["MISMATCH r_table row a=24: computed [11, 14, 18, 19, 21, 22], "
                          "reference [11, 14, 19, 21, 22]"]
    assert "closure up to 120: {3, 4, 7, 8" in out
    code, doc, _ = run_json(capsys, "reproduce")
    assert set(doc["result"]) == {"r_table", "witness_tables", "closure", "mismatches"}
    assert len(doc["result"]["r_table"]) == 9 and len(doc["result"]["witness_tables"]) == 9
    assert len(doc["result"]["closure"]) == 27 and doc["result"]["closure"][0]["status"] == "assumed"


def test_reproduce_tampered_reference_is_named():
    ref = golden.reference()
    ref["closure"] = ref["closure"][:-1]
    ref["witness_7"] = {**ref["witness_7"], 0: 4}
    got = reproduce(ref).mismatches
    assert any(m.startswith("closure list: extra [120]") for m in got)
    assert any(m.startswith("witness a=7") for m in got)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "floorsq", "residues", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "R_7 = {4, 6}"
