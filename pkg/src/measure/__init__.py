from .types import OutcomeKind, PartialUsdIsometry, PgmOracleResult, PgmSpectrum, UsdOutcome
from .discrimination import (
    binary_usd_sample,
    efficient_usd_distribution,
    helstrom_flip_prob,
    helstrom_success,
    partial_usd_isometry,
    partial_usd_keep_probability,
    partial_usd_measure_word,
    partial_usd_sample,
    phase_usd_params,
    qary_usd_sample,
    usd_measure_word,
    usd_optimal_bound,
    usd_sample_overlap,
)
from .pgm import (
    fourier_codeword_states,
    log_dual_weight_terms,
    pgm_dense_oracle,
    pgm_spectrum,
    pgm_spectrum_from_spectra,
)
from .exceptions import DomainError, MeasurementError, OracleFailure, ParameterOrderError

__all__ = [
    'UsdOutcome',
    'OutcomeKind',
    'PgmSpectrum',
    'PgmOracleResult',
    'PartialUsdIsometry',

    'helstrom_success',
    'helstrom_flip_prob',
    'usd_sample_overlap',
    'binary_usd_sample',
    'partial_usd_keep_probability',
    'partial_usd_sample',
    'qary_usd_sample',
    'usd_measure_word',
    'partial_usd_measure_word',
    'phase_usd_params',
    'usd_optimal_bound',
    'efficient_usd_distribution',
    'partial_usd_isometry',
    'pgm_spectrum',
    'pgm_spectrum_from_spectra',
    'pgm_dense_oracle',
    'fourier_codeword_states',
    'log_dual_weight_terms',

    'MeasurementError',
    'ParameterOrderError',
    'OracleFailure',
    'DomainError',
]
