#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Global configuration for the wgeo project.

Attributes:
    PROJECT_ROOT (Path): The directory the CLI was invoked from.
    DATA_ROOT (Path): Base directory for relative output paths.
    DEFAULT_ORBIT_CAP (int): Default cap on minimal-orbit exploration.
    CLI_MAX_RANK (int): Largest rank expressible with letters a-z.
    MINOR_PATTERN_CAP (int): Largest pattern accepted by minor search.
    MINOR_HOST_CAP (int): Largest host accepted by minor search.
    ISOMORPHISM_CAP (int): Largest graphs accepted by isomorphism tests.
    REGULAR_GRAPH_ATTEMPTS (int): Rejection budget of the random
        regular graph generator.
    CERTIFICATE_VERSION (int): Schema version written into certificates.
    RNG_ALGORITHM (str): Identifier of the bit generator behind every
        seeded simulation.
"""

import os
from pathlib import Path


def _determine_project_root() -> Path:
    """
    Determine the wgeo project root directory.

    Uses the current working directory, which should be the project
    root when the CLI is invoked from the project folder.

    Returns:
        Path: The project root directory.
    """
    return Path.cwd()


PROJECT_ROOT: Path = _determine_project_root()

_env: str | None = os.getenv("WGEO_DATA_ROOT")
DATA_ROOT: Path = Path(_env) if _env else PROJECT_ROOT / "data"

DEFAULT_ORBIT_CAP: int = 10_000
CLI_MAX_RANK: int = 26
MINOR_PATTERN_CAP: int = 8
MINOR_HOST_CAP: int = 24
ISOMORPHISM_CAP: int = 32
REGULAR_GRAPH_ATTEMPTS: int = 2000
CERTIFICATE_VERSION: int = 1
RNG_ALGORITHM: str = "numpy.random.PCG64"


def orbit_cap_from_env() -> int:
    """
    Return the orbit cap, honouring the WGEO_ORBIT_CAP override.

    Returns:
        int: The value of WGEO_ORBIT_CAP if set, else DEFAULT_ORBIT_CAP.

    Raises:
        ValueError: If WGEO_ORBIT_CAP is not a positive integer.
    """
    raw = os.getenv("WGEO_ORBIT_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_ORBIT_CAP
    try:
        cap = int(raw)
    except ValueError as e:
        raise ValueError(f"Invalid WGEO_ORBIT_CAP: {raw!r}") from e
    if cap < 1:
        raise ValueError(f"WGEO_ORBIT_CAP must be positive, got {cap}")
    return cap
