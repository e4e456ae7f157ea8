#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Module for byte-stable JSON: serializing, loading and saving documents.

Keys keep their insertion order and every document ends with a newline,
so the same object always produces the same bytes.
"""

import json
from pathlib import Path
from typing import Any

from .file_handler import FileHandler


def dumps(data: Any) -> str:
    """Serialize with indent 2, insertion-ordered keys and a newline."""
    return json.dumps(data, indent=2, ensure_ascii=True) + "\n"


class JSONHandler:
    """
    Load and save JSON documents under DATA_ROOT or at absolute paths.
    """

    @staticmethod
    def load_json(path: str | Path) -> Any:
        """
        Load a JSON document.

        Args:
            path (str | Path): Relative (to DATA_ROOT) or absolute path.

        Returns:
            Any: The parsed document.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: If the file is not a .json file.
            json.JSONDecodeError: If the file contains invalid JSON.
            OSError: For other I/O errors when opening the file.
        """
        file_path = FileHandler.resolve(path)
        if not file_path.exists():
            raise FileNotFoundError(f"JSON file not found: {file_path}")
        if file_path.suffix.lower() != ".json":
            raise ValueError(f"Expected a .json file, but got: {file_path}")

        try:
            with file_path.open("r", encoding="utf-8") as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise json.JSONDecodeError(
                f"Failed to parse JSON file '{file_path}': {e.msg}",
                e.doc,
                e.pos,
            ) from e
        except OSError as e:
            raise OSError(
                f"Failed to open JSON file '{file_path}': {e.strerror}"
            ) from e

    @staticmethod
    def save_json(data: Any, path: str | Path) -> Path:
        """
        Save a document as byte-stable JSON.

        Args:
            data (Any): The object to serialize.
            path (str | Path): Relative (to DATA_ROOT) or absolute path
                ending in .json.

        Returns:
            Path: The written file.

        Raises:
            ValueError: If the path does not end in .json.
            OSError: For I/O errors when creating or writing the file.
        """
        file_path = FileHandler.prepare_output(path, ".json")
        try:
            file_path.write_text(dumps(data), encoding="utf-8")
        except OSError as e:
            raise OSError(
                f"Failed to write JSON file '{file_path}': {e.strerror}"
            ) from e
        return file_path
