#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Add the project src directory (and tests/, for the oracle helpers) to
Python's import path, and provide shared fixtures.
"""

import os
import sys
from pathlib import Path

import pytest

# Project-Root = one layer above tests/
ROOT_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
SRC_DIR = os.path.join(ROOT_DIR, "src")
TESTS_DIR = os.path.join(ROOT_DIR, "tests")
for path in (SRC_DIR, TESTS_DIR):
    if path not in sys.path:
        sys.path.insert(0, path)

from wgeo import config  # noqa: E402
from wgeo.core.multigraph import MultiGraph  # noqa: E402
from wgeo.core.word import Alphabet, CyclicWord, parse_collection  # noqa: E402

K33_WORD = "bbaaccabc"
COMMUTATOR_WORD = "baabccACBBCA"


@pytest.fixture
def rank3() -> Alphabet:
    return Alphabet(3)


@pytest.fixture
def k33_words() -> list[CyclicWord]:
    """The single word whose Whitehead graph is K3,3."""
    return parse_collection(K33_WORD, Alphabet(3))


@pytest.fixture
def commutator_words() -> list[CyclicWord]:
    """The word with a 4-valent, 4-edge-connected non-planar graph."""
    return parse_collection(COMMUTATOR_WORD, Alphabet(3))


@pytest.fixture
def k33() -> MultiGraph:
    return MultiGraph.complete_bipartite(3, 3)


@pytest.fixture
def k4() -> MultiGraph:
    return MultiGraph.complete(4)


@pytest.fixture
def square() -> MultiGraph:
    return MultiGraph.cycle(4)


@pytest.fixture
def isolate_data_root(tmp_path: Path, monkeypatch) -> Path:
    """Point DATA_ROOT at a temporary directory."""
    monkeypatch.setenv("WGEO_DATA_ROOT", str(tmp_path))
    monkeypatch.setattr(config, "DATA_ROOT", tmp_path)
    return tmp_path
