import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from nambu import cli

DATA = Path(__file__).parent / "data"
GOLDEN = json.loads((DATA / "golden.json").read_text())


@pytest.mark.parametrize("case", GOLDEN, ids=lambda c: " ".join(c["argv"])[:60] or "empty")
def test_golden(case):
    code, obj, _ = cli.run(case["argv"])
    jsonschema.validate(obj, cli.OUTPUT_SCHEMA)
    assert code == case["exit"]
    assert obj["status"] == case["status"]
    assert code == cli.EXIT_CODES[obj["status"]]
    if "result" in case:
        assert obj["result"] == case["result"]
    if "citation" in case:
        assert obj["citation"] == case["citation"]
    assert ("witness" in obj) == bool(case.get("witness"))


def test_spec_commands():
    code, obj, _ = cli.run(["bracket", "--n", "3", "--potential", "t1*t2*t3*t4",
                            "--args", "t2", "t3", "t4"])
    assert code == 0 and obj["result"]["value"] == "-t2*t3*t4"
    code, obj, _ = cli.run(["torus", "embed", "--from-q", "6", "--to-q", "2"])
    assert code == 0 and obj["status"] == "ok" and obj["witness"]
    code, obj, _ = cli.run(["pde", "decide", "--a", "2*t1*t2*t3", "--b", "3*t1*t2*t3"])
    assert code == 1 and obj["status"] == "unsolvable" and obj["citation"] == "Cor 7.4(1)"


def _corpus():
    return [ln.split(" ", 1) for ln in (DATA / "corpus.txt").read_text().splitlines()
            if ln and not ln.startswith("#")]


@pytest.mark.parametrize("mode, text", _corpus())
def test_schema_on_corpus_inputs(mode, text):
    for argv in (["pde", "decide", "--a", text, "--b", "t1*t2*t3"],
                 ["center", "--n", "3", "--potential", "t1*t2*t3*t4", "--f", text],
                 ["singularity", "--potential", text]):
        code, obj, _ = cli.run(argv)
        jsonschema.validate(obj, cli.OUTPUT_SCHEMA)
        assert code == cli.EXIT_CODES[obj["status"]]
        # deterministic
        assert cli.run(argv)[:2] == (code, obj)


def test_negative_values_are_not_flags():
    code, obj, _ = cli.run(["valuation", "check", "--n", "2", "--q", "3",
                            "--weights", "-1,0", "--w", "0"])
    assert code == 0, obj
    code, obj, _ = cli.run(["bracket", "--potential", "t4", "--n", "3",
                            "--args", "-t1", "t2", "t3"])
    assert code == 0 and obj["result"]["value"] == "-1"
    code, obj, _ = cli.run(["torus", "iso", "--n", "2", "--q", "-2", "--q2", "2"])
    assert code == 0


def test_parse_error_position():
    code, obj, _ = cli.run(["pde", "decide", "--a", "t1 +", "--b", "t1"])
    assert code == 2
    assert obj["result"]["line"] == 1 and obj["result"]["column"] == 5


def test_descriptor_round_trip(tmp_path):
    code, obj, _ = cli.run(["bracket", "--n", "3", "--potential", "t1^4 + t2^4 + t3^4 + t4^4",
                            "--args", "t1", "t2", "t3"])
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(obj))
    code2, obj2, _ = cli.run(["bracket", "--descriptor", str(path), "--args", "t1", "t2", "t3"])
    assert code2 == 0 and obj2["result"] == obj["result"]
    path.write_text(json.dumps(obj["result"]["algebra"]))
    code3, obj3, _ = cli.run(["center", "--descriptor", str(path), "--f", "t1^4 + t2^4 + t3^4 + t4^4"])
    assert code3 == 0 and obj3["result"]["central"] is True
    code4, obj4, _ = cli.run(["center", "--descriptor", str(tmp_path / "missing.json"), "--f", "t1"])
    assert code4 == 2


def test_text_format():
    code, obj, fmt = cli.run(["--format", "text", "torus", "embed", "--from-q", "6", "--to-q", "2"])
    assert fmt == "text"
    out = cli.render(obj, fmt)
    assert "status: ok" in out and "citation: Thm 4.16" in out


def test_usage_errors():
    for argv in (["torus", "embed", "--from-q", "2"],
                 ["bracket", "--n", "3", "--args", "t1"],
                 ["aut", "fermat", "--n", "3"],
                 ["gamma", "--field", "nk", "--w", "1"]):
        code, obj, _ = cli.run(argv)
        assert code == 2 and obj["status"] == "error", argv


def test_main_prints_json(capsys):
    assert cli.main(["torus", "iso", "--n", "3", "--q", "2", "--q2", "3"]) == 1
    obj = json.loads(capsys.readouterr().out)
    assert obj["result"]["isomorphic"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nambu", "groups", "enumerate", "--label", "G2",
                           "--n", "3", "--d0", "2"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["status"] == "error"
