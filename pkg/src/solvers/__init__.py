from .types import SolveOutcome, SolveReport, SweepPoint
from .instance import NoisyCodewordState, QdpInstance, sample_instance, sample_phase_instance
from .decoders import (
    nearest_codeword,
    pgm_outcome_distribution,
    solve_classical_ml,
    solve_pgm_exact,
    solve_usd,
)
from .partial import PartialReduction, kept_count_failure_bound, reduce_partial_usd, solve_partial_usd
from .harness import count_outcomes, run_trials
from .sweep import tractability_sweep
from .exceptions import BudgetExceeded, SolverError, StateConsumed, TooFewKept, UnsupportedProfile

__all__ = [
    'QdpInstance',
    'NoisyCodewordState',
    'SolveReport',
    'SolveOutcome',
    'SweepPoint',
    'PartialReduction',

    'sample_instance',
    'sample_phase_instance',
    'solve_usd',
    'solve_pgm_exact',
    'solve_classical_ml',
    'nearest_codeword',
    'pgm_outcome_distribution',
    'reduce_partial_usd',
    'solve_partial_usd',
    'kept_count_failure_bound',
    'tractability_sweep',
    'run_trials',
    'count_outcomes',

    'SolverError',
    'TooFewKept',
    'StateConsumed',
    'UnsupportedProfile',
    'BudgetExceeded',
]
