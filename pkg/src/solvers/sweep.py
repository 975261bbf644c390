from typing import List, Optional, Sequence, Union

import numpy as np

from codes import coset_spectra, random_code
from gf import FiniteField, field_of_order
from measure import pgm_spectrum_from_spectra
from noise import NoiseProfile, thresholds
from utils.logging_config import get_logger, log_event

from .constants import SWEEP_CODES
from .decoders import pgm_outcome_distribution, solve_pgm_exact
from .harness import run_trials
from .instance import QdpInstance
from .types import SweepPoint

logger = get_logger(__name__)


def tractability_sweep(
    q: Union[int, FiniteField],
    n: int,
    k: int,
    omega_grid: Sequence[float],
    trials: int,
    rng: np.random.Generator,
    codes: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[SweepPoint]:
    """Empirical PGM success and P_PGM along an omega grid.

    A few random codes are drawn once and their coset spectra reused at every
    noise level; trial i decodes on code i mod `codes`.
    """
    field = q if isinstance(q, FiniteField) else field_of_order(q)
    codes = codes or SWEEP_CODES
    sampled = [random_code(field, n, k, rng) for _ in range(codes)]
    tables = [coset_spectra(code) for code in sampled]
    bounds = thresholds(field.q, k / n)

    points = []
    for omega in omega_grid:
        profile = NoiseProfile(field.q, omega)
        spectra = [pgm_spectrum_from_spectra(table, profile) for table in tables]
        distributions = [pgm_outcome_distribution(spectrum, field) for spectrum in spectra]

        def trial(index: int, trial_rng: np.random.Generator) -> bool:
            which = index % codes
            instance = QdpInstance(sampled[which], profile, field.random_elements(trial_rng, k),
                                   seed=int(trial_rng.integers(0, 2 ** 63 - 1)))
            return solve_pgm_exact(instance, spectrum=spectra[which], distribution=distributions[which]).recovered

        successes = sum(run_trials(trial, trials, seed=int(rng.integers(0, 2 ** 63 - 1)), workers=workers))
        point = SweepPoint(
            omega=float(omega),
            trials=trials,
            successes=int(successes),
            p_pgm=float(np.mean([spectrum.p_pgm for spectrum in spectra])),
            easy_bound=bounds.easy_bound,
            tractable_bound=bounds.tractable_bound,
        )
        log_event(
            logger, "info", f"Sweep point omega={point.omega:.4f}", event_type="sweep_point",
            extra=point.as_row(),
        )
        points.append(point)
    return points
