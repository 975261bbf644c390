import json
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Optional, Tuple

import numpy as np


class OutcomeKind(Enum):
    """Result of a single-coordinate unambiguous measurement."""
    SYMBOL = "symbol"
    ABORT = "abort"


@dataclass(frozen=True)
class UsdOutcome:
    kind: OutcomeKind
    symbol: Optional[int] = None
    # noise left on the kept coordinate by partial USD (0 for strict USD)
    post_noise: Optional[float] = None

    @classmethod
    def found(cls, symbol: int, post_noise: float = 0.0) -> "UsdOutcome":
        return cls(OutcomeKind.SYMBOL, int(symbol), float(post_noise))

    @classmethod
    def abort(cls) -> "UsdOutcome":
        return cls(OutcomeKind.ABORT)

    @property
    def is_abort(self) -> bool:
        return self.kind is OutcomeKind.ABORT


@dataclass(frozen=True)
class PgmSpectrum:
    """Coset norms n_s of the Fourier-side PGM, one per syndrome index (little-endian over F_q^k)."""
    q: int
    n: int
    k: int
    rank: int
    omega: float
    norms: np.ndarray = dataclass_field(repr=False)

    @property
    def n0(self) -> float:
        return float(self.norms[0])

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.norms ** 2))

    @property
    def p_pgm(self) -> float:
        """(sum_s n_s)^2 / q^rank, the PGM success probability."""
        return min(1.0, float(np.sum(self.norms)) ** 2 / float(self.q) ** self.rank)

    @property
    def opt_interval(self) -> Tuple[float, float]:
        """Bounds P_PGM <= P_OPT <= sqrt(P_PGM) on the optimal success."""
        p = self.p_pgm
        return p, float(np.sqrt(p))

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "omega": self.omega,
            "n_s": self.norms.tolist(),
            "p_pgm": self.p_pgm,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class PgmOracleResult:
    """Dense-state PGM: average success and the success of each distinct codeword."""
    success: float
    per_codeword: np.ndarray = dataclass_field(repr=False)
    retained_rank: int = 0


@dataclass(frozen=True)
class PartialUsdIsometry:
    """Images alpha |psi_b^{omega'}> + beta |2> of |psi_b^omega>, rows b = 0, 1, in C^3."""
    omega: float
    omega_prime: float
    alpha: float
    beta: float
    images: np.ndarray = dataclass_field(repr=False)

    @property
    def keep_probability(self) -> float:
        return self.alpha ** 2
