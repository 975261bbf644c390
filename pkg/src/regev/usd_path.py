"""USD path of the reduction: decode on C by coordinate-wise USD, then Fourier-sample (C_J)^perp.

Once USD has revealed J, the state is a uniform superposition over {c_J : c in C};
its Fourier transform is uniform over (C_J)^perp, so a uniform dual word of the
punctured code, padded with zeros outside J, has exactly the measured distribution.
"""

import itertools
from collections import Counter, defaultdict
from typing import Dict, Optional, Tuple

import numpy as np

from gf import hamming_weight, indices_from_vectors, vectors_from_indices
from noise import usd_success_prob
from qstate import DenseState, qft_dense
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import DUAL_RESAMPLE_LIMIT, EXACT_PATH_MAX_SPACE, J_RESAMPLE_LIMIT
from .exceptions import DegenerateDual, InfeasibleReduction, JRejected
from .instance import ScpInstance
from .types import ReductionOutcome, ReductionReport, ReductionVariant

logger = get_logger(__name__)


def usd_path_parameters(scp: ScpInstance, epsilon: Optional[float] = None) -> Tuple[float, float]:
    """(p_usd, epsilon), epsilon defaulting to half the gap p_usd - R."""
    p_usd = usd_success_prob(scp.q, scp.omega)
    if p_usd <= scp.rate:
        raise InfeasibleReduction(f"p_usd={p_usd:.4f} does not exceed R={scp.rate:.4f}")
    if epsilon is None:
        epsilon = (p_usd - scp.rate) / 2
    return p_usd, epsilon


def _accept(size: int, n: int, rate: float, epsilon: float, p_usd: float) -> None:
    if not (rate + epsilon) * n <= size <= p_usd * n:
        raise JRejected(f"|J|={size} outside [{(rate + epsilon) * n:.1f}, {p_usd * n:.1f}]", size)


def _dual_word(scp: ScpInstance, positions: np.ndarray, rng: np.random.Generator) -> Optional[np.ndarray]:
    """Uniform element of (C_J)^perp embedded in F_q^n, or None when that code is {0}."""
    generator = scp.code.puncture(positions).parity_check
    if generator.shape[0] == 0:
        return None
    field = scp.field
    word = np.zeros(scp.n, dtype=np.int64)
    word[positions] = field.matmul(field.random_elements(rng, generator.shape[0]), generator)
    return word


def reduce_usd_path(scp: ScpInstance, rng: np.random.Generator, epsilon: Optional[float] = None) -> ReductionReport:
    """One run of the USD path; ABORT when no J is accepted within the resample limit.

    Raises:
        InfeasibleReduction: p_usd <= R.
        DegenerateDual: (C_J)^perp stayed {0} over the dual resample limit.
    """
    p_usd, epsilon = usd_path_parameters(scp, epsilon)
    n = scp.n
    draws, degenerate = 0, 0
    while True:
        positions = None
        for _ in range(J_RESAMPLE_LIMIT):
            draws += 1
            mask = rng.random(n) < p_usd
            try:
                _accept(int(mask.sum()), n, scp.rate, epsilon, p_usd)
            except JRejected:
                continue
            positions = np.flatnonzero(mask)
            break
        if positions is None:
            return ReductionReport(ReductionVariant.USD_PATH, ReductionOutcome.ABORT,
                                   weight_bound=scp.weight_bound, j_draws=draws)
        word = _dual_word(scp, positions, rng)
        if word is not None:
            break
        degenerate += 1
        if degenerate >= DUAL_RESAMPLE_LIMIT:
            raise DegenerateDual(f"(C_J)^perp trivial in {degenerate} draws")

    scp.verify(word)
    weight = int(hamming_weight(word))
    outcome = ReductionOutcome.CODEWORD if weight else ReductionOutcome.ZERO
    report = ReductionReport(
        ReductionVariant.USD_PATH, outcome,
        codeword=word if weight else None,
        weight=weight,
        weight_bound=scp.weight_bound,
        j_draws=draws,
        j_size=int(positions.size),
        details={"p_usd": p_usd, "epsilon": epsilon},
    )
    log_event(
        logger, "debug", "USD path run", event_type="reduction",
        extra={"variant": report.variant.value, "outcome": outcome.value, "weight": weight,
               "j_size": report.j_size, "j_draws": draws},
    )
    return report


def sample_usd_path_raw(scp: ScpInstance, rng: np.random.Generator, size: int) -> Counter:
    """Counts of (J mask index, y index) over `size` unfiltered runs (J ~ Bernoulli(p_usd)^n)."""
    p_usd = usd_success_prob(scp.q, scp.omega)
    field, n = scp.field, scp.n
    generators: Dict[int, np.ndarray] = {}
    counts: Counter = Counter()
    masks = rng.random((size, n)) < p_usd
    for mask in masks:
        mask_index = int(indices_from_vectors(2, mask.astype(np.int64)))
        positions = np.flatnonzero(mask)
        if mask_index not in generators:
            generators[mask_index] = scp.code.puncture(positions).parity_check
        generator = generators[mask_index]
        word = np.zeros(n, dtype=np.int64)
        if generator.shape[0]:
            word[positions] = field.matmul(field.random_elements(rng, generator.shape[0]), generator)
        counts[(mask_index, int(indices_from_vectors(scp.q, word)))] += 1
    return counts


def usd_path_exact_distribution(scp: ScpInstance) -> Dict[Tuple[int, int], float]:
    """Pr[(J, y)] from dense states: Fourier-transform the uniform superposition over C_J."""
    q, n, field = scp.q, scp.n, scp.field
    check_budget("USD path exact space", q ** n, EXACT_PATH_MAX_SPACE)
    p_usd = usd_success_prob(q, scp.omega)
    codewords = scp.code.codewords()
    distribution: Dict[Tuple[int, int], float] = defaultdict(float)
    for bits in itertools.product((0, 1), repeat=n):
        mask = np.array(bits, dtype=np.int64)
        size = int(mask.sum())
        p_mask = p_usd ** size * (1 - p_usd) ** (n - size)
        if p_mask == 0:
            continue
        mask_index = int(indices_from_vectors(2, mask))
        positions = np.flatnonzero(mask)
        if size == 0:
            distribution[(mask_index, 0)] += p_mask
            continue
        superposition = np.zeros(q ** size)
        np.add.at(superposition, indices_from_vectors(q, codewords[:, positions]), 1.0)
        probabilities = qft_dense(DenseState.from_unnormalized(field, size, superposition)).probabilities
        for local in np.flatnonzero(probabilities > 1e-15):
            word = np.zeros(n, dtype=np.int64)
            word[positions] = vectors_from_indices(q, size, int(local))
            distribution[(mask_index, int(indices_from_vectors(q, word)))] += p_mask * float(probabilities[local])
    return dict(distribution)
