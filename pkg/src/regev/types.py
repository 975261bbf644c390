from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np


class ReductionVariant(Enum):
    USD_PATH = "usd_path"
    PGM_PLAIN = "pgm_plain"
    PGM_TWEAKED = "pgm_tweaked"
    PGM_COUNTEREXAMPLE = "pgm_counterexample"


class ReductionOutcome(Enum):
    CODEWORD = "codeword"
    ZERO = "zero"
    BOTTOM = "bottom"
    ABORT = "abort"


@dataclass
class ReductionReport:
    variant: ReductionVariant
    outcome: ReductionOutcome
    codeword: Optional[np.ndarray] = dataclass_field(default=None, repr=False)
    weight: Optional[int] = None
    weight_bound: float = 0.0
    j_draws: int = 0
    j_size: Optional[int] = None
    branch_probability: Optional[float] = None
    details: Dict[str, Any] = dataclass_field(default_factory=dict)

    @property
    def success(self) -> bool:
        """A verified nonzero codeword of weight at most omega' n."""
        return (self.outcome is ReductionOutcome.CODEWORD and self.weight is not None
                and self.weight <= self.weight_bound)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "outcome": self.outcome.value,
            "weight": self.weight,
            "success": self.success,
            "j_draws": self.j_draws,
            "j_size": self.j_size,
            "branch_probability": self.branch_probability,
            **self.details,
        }


@dataclass(frozen=True)
class WeightDistribution:
    """p(t), t = 0..n, of the weight measured at the end of a PGM path."""
    p: np.ndarray = dataclass_field(repr=False)
    n0: float
    p_pgm: float
    branch_probability: float

    @property
    def p0(self) -> float:
        return float(self.p[0])

    def mass_within(self, center: float, radius: float) -> float:
        """Mass of the t with |t/n - center| <= radius."""
        n = self.p.size - 1
        t = np.arange(n + 1)
        return float(self.p[np.abs(t / n - center) <= radius].sum())


@dataclass
class PrangeComparison:
    """Weight histograms of Prange rounds and of USD-path outputs on one target code."""
    target_weight: int
    prange: Counter = dataclass_field(default_factory=Counter)
    usd_path: Counter = dataclass_field(default_factory=Counter)
    prange_hits: int = 0
    prange_trials: int = 0
    usd_trials: int = 0
    degenerate_dual: bool = False

    def rows(self):
        """(weight, prange_count, usd_path_count) for every weight seen."""
        for weight in sorted(set(self.prange) | set(self.usd_path)):
            yield weight, self.prange.get(weight, 0), self.usd_path.get(weight, 0)
