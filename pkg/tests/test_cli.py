from __future__ import annotations

import json

import pytest

from altq.checks import GROUPS, RunConfig, _guarded, load_config, run
from altq.cli import main
from altq.params import ConfigInvalid
from altq.report import reports_to_json
from altq.scalars import PoleAtPoint


def _verify(capsys, *argv):
    code = main(["verify", *argv])
    return code, capsys.readouterr()


def test_group_filter(capsys):
    code, out = _verify(capsys, "ybe")
    data = json.loads(out.out)
    assert code == 0
    assert [r["check_id"] for r in data] == ["ybe"]


def test_group_option(capsys):
    code, out = _verify(capsys, "--group", "ybe")
    assert code == 0 and json.loads(out.out)[0]["check_id"] == "ybe"


def test_fm_variant(capsys):
    code, out = _verify(capsys, "fm", "--order", "2", "--variant", "rep")
    assert code == 0
    assert [r["check_id"] for r in json.loads(out.out)] == ["fm.rep.order2"]


def test_json_output(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out = _verify(capsys, "pbw", "--json", str(target))
    assert code == 0
    assert "PASS  pbw.census.deg8" in out.out
    assert json.loads(target.read_text())[0]["status"] == "pass"


def test_reps_options(capsys):
    code, out = _verify(capsys, "reps", "--spins", "1", "--v", "q", "--kmax", "2", "--pmax", "2")
    ids = [r["check_id"] for r in json.loads(out.out)]
    assert code == 0
    assert "reps.dress.N=1;j=(1);v=(q)" in ids


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"params": {"k_plus": "q^3", "k_minus": "2"}, "groups": ["generators", "serre"]}))
    code, out = _verify(capsys, "all", "--config", str(cfg))
    assert code == 0
    assert {r["check_id"] for r in json.loads(out.out)} == {"generators.recursion", "generators.s_invariance", "serre.consequence"}


def test_degenerate_config_rejected(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"params": {"k_plus": "0", "k_minus": "-q^-1"}}))
    code, out = _verify(capsys, "all", "--config", str(cfg))
    assert code == 1
    assert "invalid configuration" in out.err
    assert out.out == ""


@pytest.mark.parametrize(
    "argv",
    [["fm", "--order", "1"], ["nope"], ["reps", "--n", "2", "--spins", "1/2"], ["reps", "--v", "0"]],
)
def test_invalid_arguments(capsys, argv):
    code, _ = _verify(capsys, *argv)
    assert code == 1


def test_load_config_errors(tmp_path):
    bad = tmp_path / "x.json"
    bad.write_text("[1, 2]")
    with pytest.raises(ConfigInvalid):
        load_config(bad)
    with pytest.raises(ConfigInvalid):
        load_config(tmp_path / "missing.json")
    bad.write_text(json.dumps({"params": {"k_plus": "q"}}))
    with pytest.raises(ConfigInvalid):
        load_config(bad)


def test_pole_becomes_failed_check():
    def boom():
        raise PoleAtPoint("denominator vanishes at s = 1")

    rep = _guarded(boom, "reps", 0, RunConfig())
    assert not rep.passed
    assert rep.check_id == "reps.error.00"
    assert "k_plus" in rep.details["params"]


def test_run_sorted_and_json_stable():
    cfg = RunConfig(groups=("pbw", "ybe", "serre"))
    reps = run(cfg)
    ids = [r.check_id for r in reps]
    assert ids == sorted(ids)
    assert reports_to_json(reps) == reports_to_json(run(cfg))


def test_every_group_is_selectable():
    assert set(GROUPS) >= {"ybe", "fm", "determinant", "reps", "classical", "dictionary", "pbw", "serre"}


def test_dump_generator(capsys):
    assert main(["dump", "generator", "G[1]"]) == 0
    out = capsys.readouterr().out.strip()
    assert "Delta[1]" in out and "W[0] W[1]" in out


def test_dump_delta(capsys):
    assert main(["dump", "delta", "2"]) == 0
    assert "G[2]" in capsys.readouterr().out
    assert main(["dump", "delta", "2", "--expand"]) == 0
    assert capsys.readouterr().out.strip() == "Delta[2]"


@pytest.mark.parametrize("argv", [["dump", "generator", "E0"], ["dump", "delta", "0"], ["dump", "generator", "G[3]", "--nmax", "0"]])
def test_dump_errors(capsys, argv):
    assert main(argv) == 1
