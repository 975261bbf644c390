"""PGM variants of the reduction, computed from the coset spectra of C.

After the PGM has disentangled the codeword register, a Fourier measurement
returns y in C' = C^perp with probability |f_hat(y)|^2 / n_0^2, which depends
on |y| only: p(t) = a(t) |f_hat(t)|^2 / n_0^2 with a(t) the weight enumerator
of C'. The plain variant almost always returns 0; the tweaked variant drops
the s = 0 term and lands on words of weight close to omega' n.
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import logsumexp

from codes import CosetSpectraTable, LinearCode, coset_spectra
from codes.constants import COSET_ENUMERATION_BUDGET
from gf import hamming_weight
from measure import PgmSpectrum, log_dual_weight_terms, pgm_spectrum_from_spectra
from noise import NoiseProfile
from utils.logging_config import get_logger, log_event

from .exceptions import DegenerateDual
from .instance import ScpInstance
from .types import ReductionOutcome, ReductionReport, ReductionVariant, WeightDistribution

logger = get_logger(__name__)


def _spectra(code: LinearCode, profile: NoiseProfile) -> Tuple[CosetSpectraTable, PgmSpectrum]:
    table = coset_spectra(code)
    return table, pgm_spectrum_from_spectra(table, profile)


def _log_weight_mass(table: CosetSpectraTable, profile: NoiseProfile) -> np.ndarray:
    """log a(t) |f_hat(t)|^2, -inf where C' has no word of weight t."""
    enumerator = table.weights[0].astype(np.float64)
    log_terms = log_dual_weight_terms(profile, table.code.n)
    with np.errstate(divide="ignore"):
        return np.where(enumerator > 0, np.log(enumerator) + log_terms, -np.inf)


def tweaked_branch_probability(spectrum: PgmSpectrum) -> float:
    """(sqrt(P_PGM) - n_0 / sqrt(q^k))^2 = (sum_{s != 0} n_s)^2 / q^k."""
    scale = math.sqrt(float(spectrum.q) ** spectrum.rank)
    return (math.sqrt(spectrum.p_pgm) - spectrum.n0 / scale) ** 2


def pgm_final_distribution(code: LinearCode, profile: NoiseProfile) -> WeightDistribution:
    """p(t) of the plain path; branch_probability is P_PGM."""
    table, spectrum = _spectra(code, profile)
    log_mass = _log_weight_mass(table, profile)
    p = np.exp(log_mass - logsumexp(log_mass))
    return WeightDistribution(p=p, n0=spectrum.n0, p_pgm=spectrum.p_pgm, branch_probability=spectrum.p_pgm)


def pgm_tweaked_distribution(code: LinearCode, profile: NoiseProfile) -> WeightDistribution:
    """p(t) with the zero word removed; branch_probability is the success of the tweaked measurement.

    Raises:
        DegenerateDual: C^perp = {0}.
    """
    table, spectrum = _spectra(code, profile)
    log_mass = _log_weight_mass(table, profile)
    log_mass[0] = -np.inf
    if not np.isfinite(log_mass).any():
        raise DegenerateDual("the dual code has no nonzero word")
    p = np.exp(log_mass - logsumexp(log_mass))
    return WeightDistribution(p=p, n0=spectrum.n0, p_pgm=spectrum.p_pgm,
                              branch_probability=tweaked_branch_probability(spectrum))


def pgm_counterexample_run(
    code: LinearCode, profile: NoiseProfile, rng: Optional[np.random.Generator] = None
) -> ReductionReport:
    """Z-basis variant: when its 0-branch fires the register holds |bottom>, no codeword.

    Without an rng the report is the structural BOTTOM outcome; with one, the
    branch is sampled and the other branch reports ABORT.
    """
    _, spectrum = _spectra(code, profile)
    branch = tweaked_branch_probability(spectrum)
    fired = True if rng is None else bool(rng.random() < branch)
    scale = math.sqrt(float(spectrum.q) ** spectrum.rank)
    report = ReductionReport(
        ReductionVariant.PGM_COUNTEREXAMPLE,
        ReductionOutcome.BOTTOM if fired else ReductionOutcome.ABORT,
        branch_probability=branch,
        details={
            "complement": 1.0 - branch,
            "p_pgm": spectrum.p_pgm,
            "n0": spectrum.n0,
            # the tweaked measurement still decodes with the branch probability
            "qdp_success": branch,
            "qdp_success_bound": max(0.0, math.sqrt(spectrum.p_pgm) - 1.0 / scale) ** 2,
        },
    )
    log_event(
        logger, "debug", "PGM counterexample run", event_type="reduction",
        extra={"variant": report.variant.value, "branch_probability": branch},
    )
    return report


def reduce_pgm_path(scp: ScpInstance, rng: np.random.Generator, variant: ReductionVariant) -> ReductionReport:
    """Run the plain or tweaked PGM path to the end and emit the measured word of C'."""
    if variant is ReductionVariant.PGM_PLAIN:
        distribution = pgm_final_distribution(scp.code, scp.profile)
    elif variant is ReductionVariant.PGM_TWEAKED:
        distribution = pgm_tweaked_distribution(scp.code, scp.profile)
    else:
        raise ValueError(f"reduce_pgm_path runs the plain or tweaked variant, not {variant.value}")

    if rng.random() >= distribution.branch_probability:
        return ReductionReport(variant, ReductionOutcome.ABORT, weight_bound=scp.weight_bound,
                               branch_probability=distribution.branch_probability)

    words = scp.target.codewords(budget=COSET_ENUMERATION_BUDGET)
    weights = hamming_weight(words)
    probabilities = distribution.p[weights]
    # words of one weight share p(t) evenly
    probabilities = probabilities / np.bincount(weights, minlength=scp.n + 1)[weights]
    probabilities = probabilities / probabilities.sum()
    word = words[int(rng.choice(len(words), p=probabilities))]
    scp.verify(word)
    weight = int(hamming_weight(word))
    return ReductionReport(
        variant,
        ReductionOutcome.CODEWORD if weight else ReductionOutcome.ZERO,
        codeword=word if weight else None,
        weight=weight,
        weight_bound=scp.weight_bound,
        branch_probability=distribution.branch_probability,
    )
