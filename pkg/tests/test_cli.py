"""End-to-end CLI behavior: exit codes, formats, configuration."""

import json
import os
import subprocess
import sys

import pytest
from mpmath import mpf

from modzeta.cli import main


def run_cli(*argv, env=None):
    cmd = [sys.executable, "-m", "modzeta.cli", *argv]
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(cmd, capture_output=True, text=True, env=full_env,
                          timeout=600)


def test_verify_exit_zero():
    out = run_cli("verify", "--suite", "ramanujan-classical", "--digits", "50",
                  "--jobs", "1")
    assert out.returncode == 0
    assert "4/4 passed" in out.stdout


def test_verify_unknown_suite_exit_two():
    out = run_cli("verify", "--suite", "nonsense")
    assert out.returncode == 2
    assert "unknown suite" in out.stderr


def test_verify_json_round_trip(tmp_path):
    target = tmp_path / "report.json"
    out = run_cli("verify", "--suite", "h2-variants", "--digits", "40",
                  "--format", "json", "--jobs", "1", "--out", str(target))
    assert out.returncode == 0
    blob = json.loads(target.read_text())
    assert blob["summary"]["failed"] == 0
    assert mpf(blob["identities"][0]["abs_residual"]) < mpf(10) ** -30


def test_list_suites():
    out = run_cli("verify", "--list-suites")
    assert out.returncode == 0
    assert "table-h2" in out.stdout and "all" in out.stdout


def test_eval_l_value():
    out = run_cli("eval", "L", "-7", "2", "--digits", "30")
    assert out.returncode == 0
    assert out.stdout.strip().startswith("1.151925470544491")


def test_eval_epstein():
    # E(i,2) = 30 G / pi^2 = 2.78420154533...
    out = run_cli("eval", "E", "i", "2", "--digits", "30")
    assert out.returncode == 0
    assert out.stdout.strip().startswith("2.784201545330791")


def test_eval_k_zero():
    out = run_cli("eval", "K", "0", "--digits", "20")
    assert out.returncode == 0
    assert out.stdout.strip().startswith("1.57079632679489661")


def test_eval_usage_errors():
    assert run_cli("eval", "K").returncode == 2          # bad arity
    assert run_cli("eval", "frobnicate", "1").returncode == 2
    assert run_cli("eval", "K", "2").returncode == 2     # branch cut


def test_eval_complex_argument():
    out = run_cli("eval", "lambda", "0.5+0.9i", "--digits", "15")
    assert out.returncode == 0


def test_env_digits():
    out = run_cli("eval", "G", env={"MODZETA_DIGITS": "15"})
    assert out.returncode == 0
    assert out.stdout.strip() == "0.915965594177219"


def test_config_file(tmp_path):
    cfg = tmp_path / "modzeta.cfg"
    cfg.write_text("digits=20\nformat=text\n")
    out = run_cli("eval", "zeta", "2", "--config", str(cfg))
    assert out.returncode == 0
    assert out.stdout.strip().startswith("1.6449340668482264")
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense=1\n")
    assert run_cli("eval", "zeta", "2", "--config", str(bad)).returncode == 2


def test_digits_bounds():
    assert run_cli("eval", "G", "--digits", "5").returncode == 2
    assert run_cli("eval", "G", "--digits", "2000").returncode == 2


def test_table_h2(tmp_path):
    target = tmp_path / "h2.json"
    out = run_cli("table", "h2", "--digits", "40", "--format", "json",
                  "--jobs", "1", "--out", str(target))
    assert out.returncode == 0
    blob = json.loads(target.read_text())
    assert blob["summary"]["total"] == 28
    assert blob["summary"]["failed"] == 0


def test_table_text():
    out = run_cli("table", "h3", "--digits", "30", "--jobs", "1")
    assert out.returncode == 0
    assert "cells matched" in out.stdout


def test_main_inprocess_no_command():
    assert main([]) == 2


@pytest.mark.parametrize("fn,args", [
    ("Srz", ("0.8660254037844386467637231707529362i", "1/16")),
    ("Urz", ("0.8660254037844386467637231707529362i", "1/64")),
])
def test_eval_combinations(fn, args):
    out = run_cli("eval", fn, *args, "--digits", "20")
    assert out.returncode == 0
