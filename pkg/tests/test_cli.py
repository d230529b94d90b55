import json
import subprocess
import sys

import pytest

from isimplicial import cli


def run(*args):
    return cli.main(list(args))


def test_comma_terminal_passes(capsys):
    assert run("run", "--suite", "comma-terminal", "--level-cap", "3") == 0
    out = capsys.readouterr().out
    assert "PASS terminal k=2 m=3" in out and "FAIL" not in out


def test_json_report_is_deterministic(capsys):
    args = ("run", "--suite", "sigma-free", "--suite", "comma-terminal",
            "--level-cap", "2", "--format", "json")
    run(*args)
    first = capsys.readouterr().out
    run(*args)
    assert capsys.readouterr().out == first
    report = json.loads(first)
    assert [s["suite"] for s in report["suites"]] == ["comma-terminal", "sigma-free"]


def test_empty_selection_runs_nothing(capsys):
    assert run("run") == 0
    assert "0 checks" in capsys.readouterr().out


def test_negative_control_input_fails_with_witness(tmp_path, capsys):
    p = tmp_path / "f0-cell.json"
    p.write_text(json.dumps({"kind": "free", "level": 0, "cell": "point", "name": "F0"}))
    assert run("run", "--suite", "sigma-free", "--input", str(p), "--level-cap", "2") == 1
    out = capsys.readouterr().out
    assert "FAIL F0^2" in out and "witness" in out


def test_focus_selects_one_check(capsys):
    assert run("run", "--suite", "comma-terminal", "--focus", "terminal k=1 m=2") == 0
    assert "1 checks" in capsys.readouterr().out


def test_bad_inputs_exit_2(tmp_path, capsys):
    assert run("run", "--suite", "sigma-free", "--input", str(tmp_path / "missing.json")) == 2
    assert run("run", "--suite", "comma-terminal", "--level-cap", "-1") == 2
    assert run("run", "--suite", "nonsense") == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("emit", "--input", str(bad)) == 2
    assert "line 1" in capsys.readouterr().err


def test_config_file_is_merged(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": ["comma-terminal"], "level-cap": 1, "format": "json"}))
    assert run("run", "--config", str(cfg)) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["checks"] == 4


def test_emit_and_reload(tmp_path):
    out = tmp_path / "phi.json"
    assert run("phi", "--permcat", "z2-discrete", "--level-cap", "2", "--output", str(out)) == 0
    again = tmp_path / "again.json"
    assert run("emit", "--input", str(out), "--output", str(again)) == 0
    assert out.read_text() == again.read_text()


@pytest.mark.parametrize("suite", ["filtration-identity", "operad-einfty", "hocolim-compare"])
def test_suites_pass_at_small_caps(suite, capsys):
    assert run("run", "--suite", suite, "--level-cap", "2", "--dim-cap", "3") == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "isimplicial", "run", "--suite", "comma-terminal",
                        "--level-cap", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and "4 checks, all passed" in r.stdout
