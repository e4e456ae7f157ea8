#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Tests for file_handler.py focusing on path resolution, directory
creation and output preparation.
"""

from pathlib import Path

import pytest

from wgeo.file.file_handler import FileHandler


def test_resolve_absolute_path_unchanged(tmp_path: Path):
    """An absolute path is returned as given."""
    target = tmp_path / "cert.json"
    assert FileHandler.resolve(target) == target


def test_resolve_relative_path(isolate_data_root: Path):
    """A relative path is anchored in DATA_ROOT."""
    assert FileHandler.resolve("out/cert.json") == (
        isolate_data_root / "out" / "cert.json"
    )


def test_create_directory_absolute(tmp_path: Path):
    """
    Test that create_directory creates an absolute directory
    when given an absolute path.
    """
    abs_dir = tmp_path / "abs_test"
    result = FileHandler.create_directory(str(abs_dir))
    assert result.exists() and result.is_dir()
    assert result == abs_dir


def test_create_directory_relative(isolate_data_root: Path):
    """
    Test that create_directory creates a directory
    under DATA_ROOT for relative paths.
    """
    result = FileHandler.create_directory("rel_test")
    expected = isolate_data_root / "rel_test"
    assert result.exists() and result.is_dir()
    assert result == expected


def test_create_directory_failure(tmp_path: Path):
    """A file in the way of a directory raises OSError with context."""
    blocker = tmp_path / "blocker"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(OSError, match="Failed to create directory"):
        FileHandler.create_directory(blocker / "sub")


def test_prepare_output_creates_parent(isolate_data_root: Path):
    path = FileHandler.prepare_output("reports/run.csv", ".csv")
    assert path == isolate_data_root / "reports" / "run.csv"
    assert path.parent.is_dir()
    assert not path.exists()


def test_prepare_output_is_case_insensitive(tmp_path: Path):
    path = FileHandler.prepare_output(tmp_path / "CERT.JSON", ".json")
    assert path.name == "CERT.JSON"


@pytest.mark.parametrize(
    "name, suffix",
    [("cert.txt", ".json"), ("cert", ".json"), ("cert.json", "json")],
)
def test_prepare_output_rejects_suffix(tmp_path: Path, name, suffix):
    with pytest.raises(ValueError):
        FileHandler.prepare_output(tmp_path / name, suffix)


def test_prepare_output_parent_failure(tmp_path: Path):
    blocker = tmp_path / "blocker"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(OSError, match="Cannot ensure directory exists"):
        FileHandler.prepare_output(blocker / "cert.json", ".json")
