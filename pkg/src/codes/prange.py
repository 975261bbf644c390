"""Prange-style search for a codeword of weight floor((q-1)(n-k)/q)."""

import math
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Optional

import numpy as np

from gf import FiniteField, hamming_weight
from utils.logging_config import get_logger, log_event

from .constants import PRANGE_ROUND_FACTOR
from .exceptions import DegenerateTarget, NoHit, SingularSystem
from .linalg import row_reduce

logger = get_logger(__name__)


@dataclass
class PrangeResult:
    target_weight: int
    rounds: int = 0
    singular_rounds: int = 0
    codeword: Optional[np.ndarray] = None
    weight_histogram: Dict[int, int] = dataclass_field(default_factory=Counter)

    @property
    def hit(self) -> bool:
        return self.codeword is not None


def default_max_rounds(n: int) -> int:
    """round_factor * ceil(sqrt(n)) rounds."""
    return PRANGE_ROUND_FACTOR * math.ceil(math.sqrt(n))


def prange_target_weight(q: int, redundancy: int) -> int:
    return ((q - 1) * redundancy) // q


def _round(field: FiniteField, parity_check: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """One round: random information set J, weight-1 word on J, solve for the rest.

    The redundancy positions are the pivots of H scanned in a random column
    order, so H restricted to them is invertible whenever H has full row rank.
    """
    redundancy, n = parity_check.shape
    order = rng.permutation(n)
    reduced, pivots = row_reduce(field, parity_check, column_order=order)
    if len(pivots) < redundancy:
        raise SingularSystem(f"parity-check restriction has rank {len(pivots)} < {redundancy}")
    pivot_set = set(pivots)
    information_set = [int(c) for c in order if int(c) not in pivot_set]
    position = information_set[int(rng.integers(len(information_set)))]
    value = int(field.random_nonzero(rng))

    word = np.zeros(n, dtype=np.int64)
    word[position] = value
    word[pivots] = field.neg(field.mul(value, reduced[:redundancy, position]))
    return word


def prange_short_codeword(
    field: FiniteField,
    parity_check: np.ndarray,
    rng: np.random.Generator,
    max_rounds: Optional[int] = None,
) -> PrangeResult:
    """Search ker(H) for a nonzero word of weight exactly floor((q-1)(n-k)/q).

    Args:
        parity_check: (n-k) x n matrix H; the searched code is {c : H c^T = 0}.
        max_rounds: round budget, default round_factor * ceil(sqrt(n)).

    Raises:
        DegenerateTarget: the target weight is 0 or the code is {0}.
        NoHit: no exact hit within the budget; `err.result` holds the histogram.
    """
    h = np.asarray(parity_check, dtype=np.int64)
    redundancy, n = h.shape
    target = prange_target_weight(field.q, redundancy)
    if target < 1 or redundancy >= n:
        raise DegenerateTarget(f"target weight {target} with {redundancy} checks on n={n}")
    if max_rounds is None:
        max_rounds = default_max_rounds(n)

    result = PrangeResult(target_weight=target)
    for _ in range(max_rounds):
        result.rounds += 1
        try:
            word = _round(field, h, rng)
        except SingularSystem:
            result.singular_rounds += 1
            continue
        weight = hamming_weight(word)
        result.weight_histogram[weight] += 1
        if weight == target and not np.any(field.matmul(h, word)):
            result.codeword = word
            log_event(
                logger, "debug", "Prange hit", event_type="prange_round",
                field=field.descriptor,
                extra={"n": n, "target_weight": target, "rounds": result.rounds},
            )
            return result

    log_event(
        logger, "info", "Prange search exhausted its round budget", event_type="prange_nohit",
        field=field.descriptor,
        extra={"n": n, "target_weight": target, "rounds": result.rounds,
               "singular_rounds": result.singular_rounds},
    )
    raise NoHit(f"no weight-{target} codeword after {result.rounds} rounds", result)
