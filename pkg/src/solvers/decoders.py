"""QDP solvers: coordinate-wise USD, the exact PGM and the classical ML baseline."""

import time
from typing import Optional

import numpy as np

from codes import InconsistentRestriction, RankDeficient
from gf import FiniteField, hamming_weight, vectors_from_indices
from measure import PgmSpectrum, pgm_spectrum
from noise import ERASURE
from qstate import DenseState, qft_dense
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import ML_CHUNK_SIZE, ML_CODEWORD_BUDGET
from .instance import QdpInstance
from .types import SolveReport

logger = get_logger(__name__)


def _report(instance: QdpInstance, solver: str, candidate, started: float, **kwargs) -> SolveReport:
    report = SolveReport(
        solver=solver,
        outcome=instance.score(candidate),
        codeword=candidate,
        wall_time=time.perf_counter() - started,
        **kwargs,
    )
    log_event(
        logger, "debug", f"{solver} finished: {report.outcome.value}", event_type="solve",
        extra={"solver": solver, "n": instance.n, "k": instance.k, "outcome": report.outcome.value,
               "revealed": report.revealed},
    )
    return report


def solve_usd(instance: QdpInstance, rng: Optional[np.random.Generator] = None) -> SolveReport:
    """USD on every coordinate, then c = recovery from the revealed set J when rank(G_J) = k."""
    started = time.perf_counter()
    code = instance.code
    measured = instance.prepare_state(rng).measure_usd()
    revealed = np.flatnonzero(measured != ERASURE)
    candidate, rank = None, None
    try:
        candidate = code.recover_from_coordinates(revealed, measured[revealed])
        rank = code.k
    except RankDeficient as err:
        rank = err.rank
    except InconsistentRestriction:
        pass
    return _report(instance, "usd", candidate, started, revealed=int(revealed.size), rank=rank)


def pgm_outcome_distribution(spectrum: PgmSpectrum, field: FiniteField) -> np.ndarray:
    """Pr[c - c' = delta G] for every delta in F_q^k (little-endian index).

    The amplitudes are the Fourier transform of the vector (n_s) over F_q^k;
    summed over the left kernel of G, delta = 0 carries P_PGM.
    """
    if spectrum.k == 0:
        return np.ones(1)
    norms = DenseState.from_unnormalized(field, spectrum.k, spectrum.norms)
    probabilities = qft_dense(norms).probabilities
    return probabilities / probabilities.sum()


def solve_pgm_exact(
    instance: QdpInstance,
    spectrum: Optional[PgmSpectrum] = None,
    rng: Optional[np.random.Generator] = None,
    distribution: Optional[np.ndarray] = None,
) -> SolveReport:
    """Sample the PGM outcome from its exact distribution (no dense states)."""
    started = time.perf_counter()
    code = instance.code
    if distribution is None:
        if spectrum is None:
            spectrum = pgm_spectrum(code, instance.profile)
        distribution = pgm_outcome_distribution(spectrum, code.field)
    candidate = instance.prepare_state(rng).measure_pgm(code, distribution)
    details = {"p_pgm": spectrum.p_pgm} if spectrum is not None else {}
    return _report(instance, "pgm", candidate, started, revealed=instance.n, details=details)


def nearest_codeword(code, word: np.ndarray) -> np.ndarray:
    """Exhaustive minimum-distance decoding; ties go to the lowest message index."""
    field, q, k = code.field, code.q, code.k
    check_budget("ML codewords", q ** k, ML_CODEWORD_BUDGET)
    if k == 0:
        return np.zeros(code.n, dtype=np.int64)
    best_distance, best = code.n + 1, None
    for start in range(0, q ** k, ML_CHUNK_SIZE):
        messages = vectors_from_indices(q, k, np.arange(start, min(q ** k, start + ML_CHUNK_SIZE)))
        codewords = code.encode(messages)
        distances = hamming_weight(field.sub(codewords, word[None, :]))
        position = int(np.argmin(distances))
        if distances[position] < best_distance:
            best_distance, best = int(distances[position]), codewords[position]
    return best


def solve_classical_ml(instance: QdpInstance, rng: Optional[np.random.Generator] = None) -> SolveReport:
    """Measure in the computational basis, then decode y = c + e by exhaustive ML."""
    started = time.perf_counter()
    word = instance.prepare_state(rng).measure_computational()
    candidate = nearest_codeword(instance.code, word)
    return _report(instance, "classical_ml", candidate, started, revealed=instance.n,
                   details={"distance": int(hamming_weight(instance.code.field.sub(candidate, word)))})
