"""Partial-USD reduction from QDP(2, n, k, omega) to QDP(2, floor(pn), k, omega')."""

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from codes import InconsistentRestriction, RankDeficient
from noise import NoiseProfile, hoeffding_tail
from measure import partial_usd_keep_probability
from utils.logging_config import get_logger, log_event

from .decoders import solve_usd
from .exceptions import TooFewKept, UnsupportedProfile
from .instance import QdpInstance
from .types import SolveOutcome, SolveReport

logger = get_logger(__name__)


@dataclass
class PartialReduction:
    """Inner instance on the kept coordinates and where they sit in [n]."""
    instance: QdpInstance
    positions: np.ndarray
    kept: int
    keep_probability: float


def kept_count_failure_bound(n: int, keep_probability: float, keep_fraction: float) -> float:
    """Hoeffding bound on Pr[|J| < floor(pn)] when each coordinate is kept w.p. u > p."""
    gap = keep_probability - keep_fraction
    if gap <= 0:
        return 1.0
    return hoeffding_tail(n, gap)


def reduce_partial_usd(
    instance: QdpInstance,
    omega_prime: float,
    keep_fraction: float,
    rng: Optional[np.random.Generator] = None,
) -> PartialReduction:
    """Partial USD on every coordinate; the lowest floor(pn) kept indices form J.

    Raises:
        UnsupportedProfile: the noise is not binary Bernoulli.
        TooFewKept: fewer than floor(pn) coordinates survived.
    """
    if not isinstance(instance.profile, NoiseProfile) or instance.profile.q != 2:
        raise UnsupportedProfile("partial USD needs binary Bernoulli noise")
    keep_probability = partial_usd_keep_probability(instance.profile.omega, omega_prime)
    mask = instance.prepare_state(rng).partial_usd_keep_mask(omega_prime)
    kept = np.flatnonzero(mask)
    target = math.floor(keep_fraction * instance.n)
    log_event(
        logger, "debug", "Partial USD reduction", event_type="partial_reduction",
        extra={"n": instance.n, "kept": int(kept.size), "target": target,
               "omega": instance.profile.omega, "omega_prime": omega_prime},
    )
    if kept.size < target:
        raise TooFewKept(f"kept {kept.size} coordinates, need {target}", int(kept.size), target)
    positions = kept[:target]
    seed = int((rng or np.random.default_rng(instance.seed)).integers(0, 2 ** 63 - 1))
    inner = instance.restrict(positions, NoiseProfile(2, omega_prime), seed)
    return PartialReduction(inner, positions, int(kept.size), keep_probability)


def solve_partial_usd(
    instance: QdpInstance,
    omega_prime: float,
    keep_fraction: float,
    inner_solver: Optional[Callable[[QdpInstance], SolveReport]] = None,
    rng: Optional[np.random.Generator] = None,
) -> SolveReport:
    """Reduce, solve the inner instance, then lift c_J back to c."""
    started = time.perf_counter()
    inner_solver = inner_solver or solve_usd
    try:
        reduction = reduce_partial_usd(instance, omega_prime, keep_fraction, rng)
    except TooFewKept as err:
        return SolveReport("partial_usd", SolveOutcome.ABSTAIN, revealed=err.kept,
                           wall_time=time.perf_counter() - started, details={"too_few_kept": True})

    inner = inner_solver(reduction.instance)
    candidate, rank = None, inner.rank
    if inner.codeword is not None:
        try:
            candidate = instance.code.recover_from_coordinates(reduction.positions, inner.codeword)
        except (RankDeficient, InconsistentRestriction):
            candidate = None
    return SolveReport(
        solver="partial_usd",
        outcome=instance.score(candidate),
        codeword=candidate,
        revealed=int(reduction.positions.size),
        rank=rank,
        wall_time=time.perf_counter() - started,
        details={"kept": reduction.kept, "inner_outcome": inner.outcome.value},
    )
