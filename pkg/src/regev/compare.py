from typing import Optional

import numpy as np

from codes import DegenerateTarget, NoHit, prange_short_codeword, prange_target_weight
from utils.logging_config import get_logger, log_event

from .instance import ScpInstance
from .types import PrangeComparison, ReductionOutcome
from .usd_path import reduce_usd_path

logger = get_logger(__name__)


def compare_prange(
    scp: ScpInstance,
    rng: np.random.Generator,
    trials: int,
    max_rounds: Optional[int] = None,
) -> PrangeComparison:
    """Paired weight histograms: every Prange round against USD-path outputs on C'."""
    parity_check = scp.code.generator
    comparison = PrangeComparison(target_weight=prange_target_weight(scp.q, parity_check.shape[0]))
    for _ in range(trials):
        comparison.prange_trials += 1
        try:
            result = prange_short_codeword(scp.field, parity_check, rng, max_rounds=max_rounds)
        except DegenerateTarget:
            comparison.degenerate_dual = True
            break
        except NoHit as err:
            result = err.result
        else:
            scp.verify(result.codeword)
            comparison.prange_hits += 1
        comparison.prange.update(result.weight_histogram)

        report = reduce_usd_path(scp, rng)
        comparison.usd_trials += 1
        if report.outcome is ReductionOutcome.CODEWORD:
            comparison.usd_path[report.weight] += 1

    log_event(
        logger, "info", "Prange comparison finished", event_type="reduction",
        extra={"target_weight": comparison.target_weight, "prange_hits": comparison.prange_hits,
               "trials": trials, "degenerate_dual": comparison.degenerate_dual},
    )
    return comparison
