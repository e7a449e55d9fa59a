"""Seeded random streams.

Every randomized routine draws from a ``numpy.random.Generator``. Per-shot
streams are children of the run seed keyed by shot index, so a shot's
draws do not depend on how many other shots ran or in which order.
"""
from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def shot_rng(seed: int, shot: int) -> np.random.Generator:
    """Substream for shot ``shot``; equal to ``SeedSequence(seed).spawn(...)[shot]``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(shot,))))


def as_rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, (int, np.integer)):
        return make_rng(int(rng))
    raise TypeError("rng must be a numpy Generator or an integer seed")
