"""Weight enumerators of the shifted dual codes C_s^perp = {x : G x^T = s}."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln, xlogy

from gf import hamming_weight, vectors_from_indices
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import COSET_ENUMERATION_BUDGET, MESSAGE_ENUMERATION_BUDGET, SPECTRA_BLOCK_CELLS
from .linalg import echelon_pivots, inverse
from .linear_code import LinearCode

logger = get_logger(__name__)


@dataclass(frozen=True)
class CosetSpectrum:
    """a_s(t) for t = 0..n, with the representative u_s used to enumerate the coset."""
    syndrome: Tuple[int, ...]
    weights: np.ndarray
    representative: Optional[np.ndarray]

    @property
    def size(self) -> int:
        return int(self.weights.sum())

    @property
    def is_empty(self) -> bool:
        return self.representative is None

    def to_dict(self) -> dict:
        return {
            "syndrome": list(self.syndrome),
            "weights": self.weights.tolist(),
            "representative": None if self.representative is None else self.representative.tolist(),
        }


@dataclass(frozen=True)
class CosetSpectraTable:
    """a_s(t) for every syndrome s, rows indexed little-endian over F_q^k."""
    code: LinearCode
    weights: np.ndarray  # (q^k, n + 1)
    representatives: np.ndarray  # (q^k, n), meaningful where `nonempty`
    nonempty: np.ndarray  # (q^k,) bool

    def spectrum(self, index: int) -> CosetSpectrum:
        syndrome = tuple(vectors_from_indices(self.code.q, self.code.k, index).tolist())
        rep = self.representatives[index] if self.nonempty[index] else None
        return CosetSpectrum(syndrome, self.weights[index].copy(), rep)


def _dual_chunks(code: LinearCode, budget: Optional[int]):
    dual = code.dual()
    return dual.iter_codewords(budget=COSET_ENUMERATION_BUDGET if budget is None else budget)


def coset_spectrum(
    code: LinearCode,
    syndrome: Sequence[int],
    budget: Optional[int] = None,
    representative: Optional[np.ndarray] = None,
) -> CosetSpectrum:
    """Enumerate C_s^perp as u_s + C^perp and tally Hamming weights.

    Args:
        representative: a vector with G u^T = s to start from; by default one is
            solved for. The resulting spectrum does not depend on this choice.
    """
    field = code.field
    s = np.asarray(syndrome, dtype=np.int64).reshape(-1)
    check_budget("shifted dual code", code.q ** code.dimension_of_dual,
                 COSET_ENUMERATION_BUDGET if budget is None else budget)
    if representative is None:
        representative = code.coset_representative(s)
    elif np.any(code.syndrome(representative) != s):
        raise ValueError("representative does not have the requested syndrome")
    weights = np.zeros(code.n + 1, dtype=np.int64)
    if representative is not None:
        for chunk in _dual_chunks(code, budget):
            shifted = field.add(chunk, representative[None, :])
            weights += np.bincount(hamming_weight(shifted), minlength=code.n + 1)
    return CosetSpectrum(tuple(s.tolist()), weights, representative)


def coset_representatives(code: LinearCode) -> Tuple[np.ndarray, np.ndarray]:
    """One representative per syndrome index and a mask of the solvable syndromes."""
    field, q, k, n = code.field, code.q, code.k, code.n
    syndromes = vectors_from_indices(q, k, np.arange(q ** k))
    representatives = np.zeros((q ** k, n), dtype=np.int64)
    if k == 0:
        return representatives, np.ones(1, dtype=bool)
    pivots = code.pivots
    if pivots:
        columns = code.generator[:, pivots]  # k x r, rank r
        rows = echelon_pivots(field, columns.T)
        square_inverse = inverse(field, columns[rows, :])
        representatives[:, pivots] = field.matmul(syndromes[:, rows], square_inverse.T)
    nonempty = np.all(field.matmul(representatives, code.generator.T) == syndromes, axis=1)
    return representatives, nonempty


def coset_spectra(code: LinearCode, budget: Optional[int] = None, message_budget: Optional[int] = None) -> CosetSpectraTable:
    """a_s(t) for all q^k syndromes, sharing one pass over the dual code per block."""
    field, q, n = code.field, code.q, code.n
    check_budget("syndrome enumeration", q ** code.k,
                 MESSAGE_ENUMERATION_BUDGET if message_budget is None else message_budget)
    check_budget("shifted dual code", q ** code.dimension_of_dual,
                 COSET_ENUMERATION_BUDGET if budget is None else budget)

    representatives, nonempty = coset_representatives(code)
    live = np.flatnonzero(nonempty)
    weights = np.zeros((q ** code.k, n + 1), dtype=np.int64)
    binary = q == 2

    for chunk in _dual_chunks(code, budget):
        block = max(1, SPECTRA_BLOCK_CELLS // max(1, chunk.shape[0] * max(n, 1)))
        chunk_cells = chunk.astype(np.uint8) if binary else chunk
        for start in range(0, live.size, block):
            rows = live[start:start + block]
            if binary:
                shifted = representatives[rows].astype(np.uint8)[:, None, :] ^ chunk_cells[None, :, :]
            else:
                shifted = field.add(representatives[rows][:, None, :], chunk_cells[None, :, :])
            w = np.count_nonzero(shifted, axis=2)
            offsets = w + (n + 1) * np.arange(rows.size)[:, None]
            weights[rows] += np.bincount(offsets.ravel(), minlength=rows.size * (n + 1)).reshape(rows.size, n + 1)

    log_event(
        logger, "debug", "Computed coset spectra", event_type="coset_spectra",
        field=field.descriptor,
        extra={"n": n, "k": code.k, "syndromes": int(live.size)},
    )
    return CosetSpectraTable(code, weights, representatives, nonempty)


def log_expected_coset_count(q: int, n: int, k: int, t) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    return (gammaln(n + 1) - gammaln(t + 1) - gammaln(n - t + 1)
            + xlogy(t, q - 1) - k * np.log(q))


def expected_coset_count(q: int, n: int, k: int, t):
    """S(t) = (q-1)^t binom(n, t) / q^k, the mean of a_s(t) over uniform G."""
    if np.any(np.asarray(t) < 0) or np.any(np.asarray(t) > n):
        raise ValueError("t must lie in 0..n")
    value = np.exp(log_expected_coset_count(q, n, k, t))
    return value if np.ndim(value) else float(value)


def second_moment_bound(q: int, expected: float, epsilon: float) -> float:
    """Chebyshev bound (q-1) / (eps^2 S) on Pr[|a_s(t) - S(t)| >= eps S(t)]."""
    if expected <= 0 or epsilon <= 0:
        return 1.0
    return min(1.0, (q - 1) / (epsilon ** 2 * expected))


def full_rank_probability_bound(q: int, k: int, m: int) -> float:
    """Lower bound 1 - q^(k-m) on Pr[rank = k] for a uniform k x m matrix."""
    return max(0.0, 1.0 - float(q) ** (k - m))
