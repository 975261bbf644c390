from .linear_code import (
    LinearCode,
    full_code,
    random_code,
    repetition_code,
    zero_code,
)
from .linalg import echelon_pivots, inverse, null_space, rank, row_reduce, solve
from .coset import (
    CosetSpectraTable,
    CosetSpectrum,
    coset_representatives,
    coset_spectra,
    coset_spectrum,
    expected_coset_count,
    full_rank_probability_bound,
    log_expected_coset_count,
    second_moment_bound,
)
from .prange import PrangeResult, default_max_rounds, prange_short_codeword, prange_target_weight
from .exceptions import (
    BudgetExceeded,
    CodeError,
    DegenerateTarget,
    InconsistentRestriction,
    NoHit,
    RankDeficient,
    SingularSystem,
)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def puncture(code: LinearCode, positions) -> LinearCode:
    return code.puncture(positions)


def shorten(code: LinearCode, positions) -> LinearCode:
    return code.shorten(positions)


def pseudo_inverse(code: LinearCode, positions):
    return code.pseudo_inverse(positions)


def recover_from_coordinates(code: LinearCode, positions, values):
    return code.recover_from_coordinates(positions, values)


__all__ = [
    'LinearCode',
    'CosetSpectrum',
    'CosetSpectraTable',
    'PrangeResult',

    'random_code',
    'repetition_code',
    'full_code',
    'zero_code',
    'dual',
    'puncture',
    'shorten',
    'pseudo_inverse',
    'recover_from_coordinates',
    'coset_spectrum',
    'coset_spectra',
    'coset_representatives',
    'expected_coset_count',
    'log_expected_coset_count',
    'second_moment_bound',
    'full_rank_probability_bound',
    'prange_short_codeword',
    'prange_target_weight',
    'default_max_rounds',
    'row_reduce',
    'echelon_pivots',
    'rank',
    'null_space',
    'solve',
    'inverse',

    'CodeError',
    'BudgetExceeded',
    'RankDeficient',
    'InconsistentRestriction',
    'SingularSystem',
    'DegenerateTarget',
    'NoHit',
]
