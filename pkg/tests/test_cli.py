import json
import subprocess
import sys

import pytest

from minram.cli import EXIT_INPUT, EXIT_NOT_FOUND, EXIT_OK, EXIT_VERIFY, run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out) if out.strip().startswith("{") else out
    return code, doc


def test_schinzel_document(capsys):
    code, doc = run(capsys, "schinzel", "--n", "2", "--a", "1,-1", "--t-max", "10")
    assert code == EXIT_OK
    assert doc["v"] == 1 and doc["kind"] == "schinzel"
    res = doc["result"]
    assert res["t"] == 4 and res["H_value"] == "113"
    assert res["f"]["coeffs"] == ["28", "-15", "1"]


def test_galois_poly_and_coeffs(capsys):
    code, doc = run(capsys, "galois", "--poly", "X^5 - X - 1")
    assert code == EXIT_OK and doc["result"]["status"] == "certified-sn"
    code, doc = run(capsys, "galois", "--coeffs", "1,0,0,0,1")
    assert code == EXIT_OK and doc["result"]["status"] == "not-sn"


def test_ramify(capsys):
    code, doc = run(capsys, "ramify", "--poly", "X^3 - X - 1")
    assert code == EXIT_OK
    finite = doc["result"]["finite"]
    assert [(pl["prime"], pl["status"]) for pl in finite] == [("23", "ramified")]


def test_nq_search(capsys):
    code, doc = run(capsys, "nq-search", "--group", "S3", "--n-max", "4")
    assert code == EXIT_OK
    assert any(h["gamma"] == "S4" and h["H_order"] == "4" for h in doc["result"]["hits"])


def test_frucht_emit_graph(capsys):
    code, out = run(capsys, "frucht", "--group", "C3", "--emit-graph")
    assert code == EXIT_OK
    assert out.splitlines()[0].split()[0].isdigit()


def test_realize(capsys):
    code, doc = run(capsys, "realize", "--group", "C2")
    assert code == EXIT_OK
    assert doc["result"]["degree"] == "2"


@pytest.mark.parametrize("argv,code", [
    (["bms", "--n", "2", "--p-max", "1"], EXIT_NOT_FOUND),
    (["schinzel", "--n", "3"], EXIT_NOT_FOUND),
    (["ffield", "--n", "10"], EXIT_INPUT),
    (["galois", "--poly", "X^2 +"], EXIT_INPUT),
    (["realize", "--group", "NoSuchGroup"], EXIT_INPUT),
    (["bms"], EXIT_INPUT),
])
def test_exit_codes(capsys, argv, code):
    assert run_command(argv) == code
    capsys.readouterr()


def test_error_document(capsys):
    code, doc = run(capsys, "schinzel", "--n", "3")
    assert code == EXIT_NOT_FOUND
    assert doc["status"] == "not-found"
    assert doc["error"]["stage"] == "select_a"


def test_budget_exhaustion(capsys):
    code, doc = run(capsys, "realize", "--group", "C3", "--budget-ms", "50")
    assert code == EXIT_NOT_FOUND and doc["status"] == "budget-exhausted"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "minram.conf"
    cfg.write_text("t-max = 10\na = 1,-1\n")
    code, doc = run(capsys, "schinzel", "--n", "2", "--config", str(cfg))
    assert code == EXIT_OK and doc["params"]["t_max"] == 10
    # argv wins over the file
    code, doc = run(capsys, "schinzel", "--n", "2", "--config", str(cfg), "--t-max", "20")
    assert doc["params"]["t_max"] == 20
    cfg.write_text("bogus = 1\n")
    assert run_command(["schinzel", "--n", "2", "--config", str(cfg)]) == EXIT_INPUT


def test_cache_and_verify(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "cache.jsonl"
    monkeypatch.setenv("MINRAM_CACHE", str(cache))
    for argv in (["galois", "--poly", "X^3 - X - 1"], ["bms", "--n", "3"],
                 ["schinzel", "--n", "2"], ["nq-search", "--group", "C2", "--n-max", "3"]):
        assert run_command(argv) == EXIT_OK
    capsys.readouterr()
    assert len(cache.read_text().splitlines()) == 4
    code, doc = run(capsys, "verify")
    assert code == EXIT_OK and doc["result"]["records"] == 4


def test_verify_detects_tampering(tmp_path, capsys):
    out = tmp_path / "doc.json"
    assert run_command(["bms", "--n", "3", "--output", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    doc["result"]["r"] = "91"
    out.write_text(json.dumps(doc))
    assert run_command(["verify", str(out)]) == EXIT_VERIFY
    capsys.readouterr()


def test_output_is_deterministic_across_threads(capsys):
    _, a = run(capsys, "bms", "--n", "4", "--threads", "1")
    _, b = run(capsys, "bms", "--n", "4", "--threads", "4")
    for d in (a, b):
        d.pop("timestamp")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "minram", "galois", "--coeffs=-1,-1,0,1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["status"] == "certified-sn"
