"""Seed plumbing: every random stream derives from an integer master seed."""

from __future__ import annotations

from typing import Union

import numpy as np

Seed = Union[int, tuple[int, ...]]


def make_rng(seed: Seed, *counters: int) -> np.random.Generator:
    """Generator keyed by ``(seed..., counters...)``; distinct keys give independent streams."""
    key = list(seed) if isinstance(seed, tuple) else [int(seed)]
    key.extend(counters)
    return np.random.default_rng(key)


def child_seed(seed: Seed, *counters: int) -> tuple[int, ...]:
    key = seed if isinstance(seed, tuple) else (int(seed),)
    return (*key, *counters)
