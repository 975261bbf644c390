from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np


class SolveOutcome(Enum):
    RECOVERED = "recovered"
    WRONG_CODEWORD = "wrong_codeword"
    ABSTAIN = "abstain"


@dataclass
class SolveReport:
    """Result of one solver run on one instance."""
    solver: str
    outcome: SolveOutcome
    codeword: Optional[np.ndarray] = dataclass_field(default=None, repr=False)
    revealed: int = 0
    rank: Optional[int] = None
    wall_time: float = 0.0
    details: Dict[str, Any] = dataclass_field(default_factory=dict)

    @property
    def recovered(self) -> bool:
        return self.outcome is SolveOutcome.RECOVERED

    def to_dict(self) -> dict:
        return {
            "solver": self.solver,
            "outcome": self.outcome.value,
            "revealed": self.revealed,
            "rank": self.rank,
            **self.details,
        }


@dataclass(frozen=True)
class SweepPoint:
    """One row of a tractability sweep."""
    omega: float
    trials: int
    successes: int
    p_pgm: float
    easy_bound: float
    tractable_bound: float

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def as_row(self) -> dict:
        return {
            "omega": self.omega,
            "trials": self.trials,
            "successes": self.successes,
            "p_pgm": self.p_pgm,
            "easy_bound": self.easy_bound,
            "tractable_bound": self.tractable_bound,
        }
