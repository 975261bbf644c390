"""Seed handling: one root seed, independent per-trial substreams."""

from typing import List, Optional, Union

import numpy as np

from utils.config_loader import config

SeedLike = Union[None, int, np.random.SeedSequence]


def default_seed() -> int:
    return int(config.get("experiment.seed", 0))


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    """Generator for `seed`; None falls back to the configured experiment seed."""
    if seed is None:
        seed = default_seed()
    return np.random.default_rng(seed)


def spawn_seeds(seed: SeedLike, count: int) -> List[np.random.SeedSequence]:
    """Split `seed` into `count` independent child sequences, stable in order."""
    if seed is None:
        seed = default_seed()
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return root.spawn(count)


def spawn_rngs(seed: SeedLike, count: int) -> List[np.random.Generator]:
    return [np.random.default_rng(child) for child in spawn_seeds(seed, count)]


def child_seed_value(sequence: np.random.SeedSequence) -> Optional[int]:
    """A stable integer label for a child sequence, used in reports and logs."""
    return int(sequence.generate_state(1, dtype=np.uint32)[0])
