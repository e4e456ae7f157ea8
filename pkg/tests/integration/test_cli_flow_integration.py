#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
End-to-end integration tests for the CLI.

Runs every command as a subprocess against a temporary DATA_ROOT and
checks its output and exit code.
"""

import csv
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

SRC_DIR = Path(__file__).resolve().parents[2] / "src"


@pytest.fixture
def data_root(tmp_path: Path) -> Path:
    return tmp_path


@pytest.fixture
def run_cmd(data_root: Path):
    """
    Helper to invoke the CLI.

    Returns:
        A callable taking the command-line arguments and returning the
        CompletedProcess with stdout, stderr and returncode.
    """

    def run(args: list[str]) -> subprocess.CompletedProcess[str]:
        cmd = [sys.executable, "-m", "wgeo.cli.cli"] + args
        env = os.environ.copy()
        env["WGEO_DATA_ROOT"] = str(data_root)
        env.pop("WGEO_ORBIT_CAP", None)
        env["PYTHONPATH"] = os.pathsep.join(
            p for p in (str(SRC_DIR), env.get("PYTHONPATH")) if p
        )
        return subprocess.run(
            cmd, env=env, capture_output=True, text=True, cwd=data_root
        )

    return run


def test_cli_no_command(run_cmd) -> None:
    result = run_cmd([])
    assert result.returncode == 2
    assert "usage: wgeo" in result.stderr


def test_graph_dot(run_cmd) -> None:
    result = run_cmd(["graph", "abAB"])
    assert result.returncode == 0
    assert result.stdout.startswith("graph W {")
    assert '  "A" -- "b";' in result.stdout


def test_graph_stats(run_cmd) -> None:
    result = run_cmd(["graph", "bbaaccabc", "--stats"])
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert "vertices: 6" in lines
    assert "edges: 9" in lines
    assert "regular: 3" in lines
    assert "edge_connectivity: 3" in lines
    assert "planar: false" in lines


def test_graph_json(run_cmd) -> None:
    result = run_cmd(["graph", "bbaaccabc", "--json", "--stats"])
    data = json.loads(result.stdout)
    assert len(data["edges"]) == 9
    assert data["stats"]["planar"] is False


def test_minimize_and_save(run_cmd, data_root: Path) -> None:
    result = run_cmd(["minimize", "aba", "-o", "out/min.json"])
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["initial_length"] == 3
    assert data["final_length"] == 1
    assert len(data["automorphisms"]) == 2
    saved = data_root / "out" / "min.json"
    assert saved.read_text(encoding="utf-8") == result.stdout


@pytest.mark.parametrize(
    "words, code, verdict",
    [
        (["bbaaccabc"], 0, "NotVirtuallyGeometric (k=3, representative:"),
        (["bbaaccabc,a"], 3, "NotGeometric"),
        (["bbaaccabc", "--rank", "4"], 3, "NotGeometric"),
        (["abAB"], 4, "Inconclusive"),
    ],
)
def test_certify_exit_codes(run_cmd, words, code, verdict) -> None:
    result = run_cmd(["certify"] + words)
    assert result.returncode == code
    assert result.stdout.startswith(verdict)


def test_certify_json_then_verify(run_cmd, data_root: Path) -> None:
    result = run_cmd(
        ["certify", "baabccACBBCA", "--json", "-o", "cert.json"]
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["k"] == 4
    assert "NotVirtuallyGeometric" in result.stderr

    verified = run_cmd(["verify", str(data_root / "cert.json")])
    assert verified.returncode == 0
    assert "Certificate verified" in verified.stdout


def test_verify_rejects_tampered_certificate(run_cmd, data_root) -> None:
    run_cmd(["certify", "bbaaccabc", "-o", "cert.json"])
    path = data_root / "cert.json"
    data = json.loads(path.read_text(encoding="utf-8"))
    data["k"] = 4
    path.write_text(json.dumps(data), encoding="utf-8")
    result = run_cmd(["verify", str(path)])
    assert result.returncode == 1
    assert "Invalid certificate" in result.stderr


def test_verify_missing_file(run_cmd, data_root: Path) -> None:
    result = run_cmd(["verify", str(data_root / "nope.json")])
    assert result.returncode == 2
    assert "Cannot read certificate" in result.stderr


def test_scan_rank_two(run_cmd) -> None:
    result = run_cmd(["scan", "--length", "3"])
    assert result.returncode == 0
    assert result.stdout == ""
    assert "0 words certified" in result.stderr


def test_splice_sim_word(run_cmd, data_root: Path) -> None:
    result = run_cmd(
        [
            "splice-sim", "--word", "bbaaccabc", "-d", "2", "-t", "3",
            "--seed", "5", "--csv", "sim.csv",
        ]
    )
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert list(report)[:4] == ["seed", "d", "trials", "per_trial"]
    assert report["d"] == 2
    assert report["summary"]["passed"] == 3
    assert "3/3 trials passed" in result.stderr
    with (data_root / "sim.csv").open(encoding="utf-8", newline="") as f:
        assert len(list(csv.reader(f))) == 4


def test_splice_sim_is_reproducible(run_cmd) -> None:
    args = ["splice-sim", "--regular", "6,3", "-t", "3", "--seed", "9"]
    first = run_cmd(args)
    assert first.returncode == 0, first.stderr
    assert json.loads(first.stdout)["d"] is None
    assert run_cmd(args).stdout == first.stdout


def test_splice_sim_bad_regular(run_cmd) -> None:
    result = run_cmd(["splice-sim", "--regular", "6"])
    assert result.returncode == 2


def test_selftest(run_cmd) -> None:
    result = run_cmd(["selftest"])
    assert result.returncode == 0
    assert "FAIL" not in result.stdout
    assert result.stdout.count("ok  ") == 3


@pytest.mark.parametrize(
    "args",
    [
        ["certify", "ab1"],
        ["graph", "abc", "--rank", "2"],
        ["minimize", "abBA"],
        ["certify", "abAB", "--orbit-cap", "0"],
    ],
)
def test_input_errors(run_cmd, args) -> None:
    result = run_cmd(args)
    assert result.returncode == 2
    assert result.stderr
