#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Seeded random number generators for simulations.

Every random choice in wgeo goes through a numpy `Generator` backed by
PCG64, so a run is reproduced by its seed together with
`config.RNG_ALGORITHM`.
"""

from __future__ import annotations

from numpy.random import PCG64, Generator, SeedSequence

from .. import config

SeedLike = int | SeedSequence | Generator


def make_seed(seed: int | SeedSequence) -> SeedSequence:
    """
    Turn an integer seed into a SeedSequence.

    Raises:
        ValueError: If seed is a negative integer.
    """
    if isinstance(seed, SeedSequence):
        return seed
    if seed < 0:
        raise ValueError(f"Seed must be non-negative, got {seed}")
    return SeedSequence(seed)


def make_rng(seed: SeedLike) -> Generator:
    """
    Return a PCG64 generator for a seed.

    A Generator passed in is returned unchanged, so helpers can share
    the caller's stream.
    """
    if isinstance(seed, Generator):
        return seed
    return Generator(PCG64(make_seed(seed)))


def trial_seeds(seed: int, count: int) -> list[int]:
    """
    Derive independent integer seeds for a batch of trials.

    Child seeds come from `SeedSequence.spawn`, so trial i gets the same
    seed however many trials are run.

    Args:
        seed (int): The batch seed.
        count (int): Number of trials.

    Returns:
        list[int]: One 32-bit seed per trial.
    """
    children = make_seed(seed).spawn(count)
    return [int(child.generate_state(1)[0]) for child in children]


def algorithm() -> str:
    """Identifier of the bit generator, recorded in reports."""
    return config.RNG_ALGORITHM
