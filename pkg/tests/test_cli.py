import json
import subprocess
import sys

import pytest

from wbc.cli import main

ALONG = {"ring": {"kind": "q"}, "k": 2, "a": [["1", "1"], ["0", "0"]],
         "v": [["1", "1"], ["0", "-1"]], "w": [["0", "1"], ["1", "0"]], "d": [["1", "2"], ["0", "0"]]}
BD = {"ring": {"kind": "q"}, "k": 2, "a": [[0, 0], [0, 1]], "v": [[0, -1], [1, 0]],
      "w": [[1, 0], [0, 1]], "e": [[0, 0], [1, 1]], "f": [[1, 1], [0, 0]]}
ID = [["1", "0"], ["0", "1"]]


def ident(ring):
    return {"ring": ring, "k": 2, **{s: ID for s in "abcvw"}}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_compute_along_d(capsys, tmp_path):
    path = tmp_path / "ctx.json"
    path.write_text(json.dumps(ALONG))
    code, rep = run(capsys, "compute", "--kind", "along-d", "--in", str(path))
    assert code == 0 and rep["value"]["entries"] == [["1", "2"], ["0", "0"]]


def test_compute_identity_bc_inline(capsys):
    code, rep = run(capsys, "compute", "--kind", "bc", "--in", json.dumps(ident({"kind": "gfp", "p": 3})))
    assert code == 0 and rep["value"]["entries"] == ID


def test_compute_bott_duffin_and_out_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, rep = run(capsys, "compute", "--kind", "bott-duffin", "--in", json.dumps(BD), "--out", str(out))
    assert code == 0 and rep["unique"] is True
    assert json.loads(out.read_text()) == rep


def test_exit_codes(capsys):
    bad_e = dict(BD, e=[[1, 1], [1, 1]])
    assert run(capsys, "compute", "--kind", "bott-duffin", "--in", json.dumps(bad_e))[0] == 2
    singular = dict(ident({"kind": "q"}), v=[[0, 0], [0, 0]], w=[[0, 0], [0, 0]])
    code, err = run(capsys, "compute", "--kind", "hybrid", "--in", json.dumps(singular))
    assert code == 2 and err["exit"] == 2
    none = dict(ident({"kind": "q"}), b=[[0, 0], [0, 0]])
    code, rep = run(capsys, "compute", "--kind", "bc", "--in", json.dumps(none))
    assert code == 3 and rep["exists"] is False
    assert run(capsys, "compute", "--kind", "bc", "--in", "{not json")[0] == 1
    assert run(capsys, "compute", "--kind", "bc", "--in", json.dumps({"k": 2}))[0] == 1
    assert run(capsys, "compute", "--kind", "nosuch", "--in", "{}")[0] == 1
    assert run(capsys, "oracle", "--kind", "bc", "--in", json.dumps(ident({"kind": "q"})))[0] == 4


def test_check(capsys):
    code, rep = run(capsys, "check", "--kind", "bc", "--in", json.dumps(ident({"kind": "q"})))
    assert code == 0 and rep["exists"] and rep["certificates"]
    code, rep = run(capsys, "check", "--kind", "bott-duffin", "--in", json.dumps(BD))
    assert code == 0 and rep["certificates"][0]["role"] == "decomposition"


def test_oracle(capsys):
    code, sols = run(capsys, "oracle", "--kind", "bc", "--in", json.dumps(ident({"kind": "gfp", "p": 2})))
    assert code == 0 and sols == [ID]
    none = dict(ident({"kind": "gfp", "p": 2}), b=[[0, 0], [0, 0]])
    assert run(capsys, "oracle", "--kind", "bc", "--in", json.dumps(none)) == (0, [])


def test_verify(capsys):
    code, res = run(capsys, "verify", "--suite", "idempotent-ann", "--ring", "gfp:2", "--k", "2",
                    "--mode", "exhaustive")
    assert code == 0 and res["failure_count"] == 0
    code, res = run(capsys, "verify", "--suite", "thm-8way", "--ring", "gfp:2", "--k", "2")
    assert code == 0
    code, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 1 and "nosuch" in err["message"]


def test_verify_failure_and_replay(capsys, tmp_path):
    code, res = run(capsys, "verify", "--suite", "group-iff", "--mode", "random", "--ring", "zn:4",
                    "--count", "500")
    assert code == 5 and res["failures"]
    rec = tmp_path / "fail.json"
    rec.write_text(json.dumps(res["failures"][0]))
    code, out = run(capsys, "replay", "--in", str(rec))
    assert code == 5 and out["status"] == "fail"


def test_replay_with_suite_flag(capsys):
    inst = {"instance": {"ring": {"kind": "gfp", "p": 2}, "k": 2, "slots": {s: ID for s in "abcvw"}}}
    code, out = run(capsys, "replay", "--in", json.dumps(inst), "--suite", "thm-8way")
    assert code == 0 and out["status"] == "pass"
    assert run(capsys, "replay", "--in", json.dumps({"x": 1}))[0] == 1


def test_usage_error_is_input_error(capsys):
    assert main(["compute"]) == 1


@pytest.mark.parametrize("argv", [["--help"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "wbc", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and "compute" in proc.stdout
