from .types import (
    PrangeComparison,
    ReductionOutcome,
    ReductionReport,
    ReductionVariant,
    WeightDistribution,
)
from .instance import ScpInstance, sample_scp
from .usd_path import (
    reduce_usd_path,
    sample_usd_path_raw,
    usd_path_exact_distribution,
    usd_path_parameters,
)
from .pgm_path import (
    pgm_counterexample_run,
    pgm_final_distribution,
    pgm_tweaked_distribution,
    reduce_pgm_path,
    tweaked_branch_probability,
)
from .compare import compare_prange
from .exceptions import (
    BudgetExceeded,
    CodewordVerificationError,
    DegenerateDual,
    InfeasibleReduction,
    JRejected,
    ReductionError,
)

__all__ = [
    'ScpInstance',
    'ReductionReport',
    'ReductionVariant',
    'ReductionOutcome',
    'WeightDistribution',
    'PrangeComparison',

    'sample_scp',
    'reduce_usd_path',
    'usd_path_parameters',
    'sample_usd_path_raw',
    'usd_path_exact_distribution',
    'pgm_final_distribution',
    'pgm_tweaked_distribution',
    'pgm_counterexample_run',
    'tweaked_branch_probability',
    'reduce_pgm_path',
    'compare_prange',

    'ReductionError',
    'InfeasibleReduction',
    'JRejected',
    'DegenerateDual',
    'CodewordVerificationError',
    'BudgetExceeded',
]
