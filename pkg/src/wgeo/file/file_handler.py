#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Module for resolving and preparing output paths.

Certificates, simulation reports and CSV exports are written to
absolute paths as given, or to relative paths anchored in the
configurable data root (config.DATA_ROOT).
"""

import re
from pathlib import Path

from .. import config

_SUFFIX = re.compile(r"^\.[A-Za-z0-9]+$")


class FileHandler:
    """
    Resolve artifact paths under DATA_ROOT and create their directories.
    """

    @staticmethod
    def resolve(path: str | Path) -> Path:
        """
        Return `path` if absolute, otherwise DATA_ROOT / path.

        Args:
            path (str | Path): Relative (to DATA_ROOT) or absolute path.

        Returns:
            Path: The resolved path.
        """
        candidate = Path(path)
        if candidate.is_absolute():
            return candidate
        return config.DATA_ROOT / candidate

    @staticmethod
    def create_directory(path: str | Path) -> Path:
        """
        Create a directory (and its parents) if missing.

        Args:
            path (str | Path): Relative (to DATA_ROOT) or absolute path.

        Returns:
            Path: The directory.

        Raises:
            OSError: If the directory cannot be created, with context.
        """
        dir_path = FileHandler.resolve(path)
        try:
            dir_path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise OSError(
                f"Failed to create directory '{dir_path}': {e.strerror}"
            ) from e
        return dir_path

    @staticmethod
    def prepare_output(path: str | Path, suffix: str) -> Path:
        """
        Resolve an output file path and make sure its directory exists.

        Args:
            path (str | Path): Relative (to DATA_ROOT) or absolute path.
            suffix (str): Required extension, e.g. ".json" or ".csv".

        Returns:
            Path: The file path, ready to be written.

        Raises:
            ValueError: If the suffix is malformed or the path has a
                different one.
            OSError: If the parent directory cannot be created.
        """
        if not _SUFFIX.match(suffix):
            raise ValueError(f"Invalid suffix '{suffix}'")
        file_path = FileHandler.resolve(path)
        if file_path.suffix.lower() != suffix.lower():
            raise ValueError(
                f"Expected a {suffix} file, but got: {file_path}"
            )
        try:
            FileHandler.create_directory(file_path.parent)
        except OSError as e:
            raise OSError(
                f"Cannot ensure directory exists for '{file_path}': {e}"
            ) from e
        return file_path
