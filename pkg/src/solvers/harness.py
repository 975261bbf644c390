"""Seeded Monte-Carlo trial runner shared by the experiments and the CLI."""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import numpy as np

from config import default_workers
from utils.rng import SeedLike, spawn_rngs

from .types import SolveReport

T = TypeVar("T")


def run_trials(
    trial: Callable[[int, np.random.Generator], T],
    count: int,
    seed: SeedLike = None,
    workers: Optional[int] = None,
) -> List[T]:
    """Run trial(i, rng_i) for i < count, rng_i an independent child stream of `seed`.

    Results come back in trial order, so the output does not depend on `workers`.
    """
    rngs = spawn_rngs(seed, count)
    workers = workers or default_workers()
    if workers <= 1 or count <= 1:
        return [trial(index, rng) for index, rng in enumerate(rngs)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(trial, range(count), rngs))


def count_outcomes(reports: Iterable[SolveReport]) -> Counter:
    return Counter(report.outcome for report in reports)
