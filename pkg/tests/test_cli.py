import json
import subprocess
import sys

import pytest

from sigma1.cli import EXIT_FALSE, RunConfig, jsonable, main, parse_config, run


def call(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_pi0_example(capsys):
    code, out = call(capsys, "pi0", "--p", "3", "--f", "1", "--e", "1", "--d", "1")
    assert code == 0
    assert out["pi0_over_C"] == "2" and out["pi0_over_Kbreve"] == "1"


def test_hyperplanes_example(capsys):
    code, out = call(capsys, "hyperplanes", "--p", "2", "--f", "1", "--e", "1", "--d", "1",
                     "--level", "2")
    assert code == 0
    assert out["count"] == "6" and len(out["classes"]) == 6


def test_lemma_example(capsys):
    code, out = call(capsys, "verify-lemeqsigsig", "--p", "2", "--f", "1", "--e", "1", "--d", "2")
    assert code == 0 and out["ok"] is True


@pytest.mark.parametrize("argv", [
    ["simplex", "--p", "3", "--d", "1"],
    ["simplex", "--p", "2", "--d", "2", "--type", "1,2"],
    ["xpid", "--p", "2", "--d", "2"],
    ["kummer-class", "--p", "2", "--f", "2", "--level", "2"],
    ["invariants", "--p", "3"],
    ["vertex-consistency", "--p", "3", "--d", "2"],
    ["norm-lemma", "--p", "3", "--samples", "5"],
    ["idempotents", "--p", "5"],
])
def test_subcommands_succeed(capsys, argv):
    code, out = call(capsys, *argv)
    assert code == 0 and out["ok"] is True
    assert out["subcommand"] == argv[0]


@pytest.mark.parametrize("argv", [
    ["pi0", "--p", "4"],
    ["hyperplanes", "--p", "2", "--e", "2", "--level", "3"],
    ["hyperplanes", "--p", "2", "--level", "0"],
    ["simplex", "--p", "2", "--d", "2", "--type", "1,1"],
    ["pi0", "--p", "2", "--d", "0"],
])
def test_invalid_parameters(capsys, argv):
    code, out = call(capsys, *argv)
    assert code == 2 and "error" in out


def test_false_verification_exits_one(monkeypatch):
    import sigma1.cli as cli
    monkeypatch.setitem(cli.COMMANDS, "pi0", lambda cfg: ({"pi0_over_C": 0}, False))
    code, body = run(RunConfig("pi0", 2))
    assert code == EXIT_FALSE and body["ok"] is False


def test_out_file_and_determinism(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["xpid", "--p", "3", "--d", "2", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    data = json.loads(paths[0].read_text())
    assert data["composite"]["matches_pi_Vtilde"] is True


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sigma1", "pi0", "--p", "2", "--d", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["pi0_over_C"] == "1"


def test_invariants_default_level():
    assert parse_config(["invariants"]).level == 2
    assert parse_config(["pi0"]).level == 1


def test_jsonable_integers_are_strings():
    assert jsonable({"a": [1, True, None]}) == {"a": ["1", True, None]}
    with pytest.raises(TypeError):
        jsonable(object())
