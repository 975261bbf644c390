"""Bernoulli noise profiles, their Fourier duals and the tractability thresholds."""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammaln, logsumexp, xlogy

from .constants import DOMAIN_SLACK
from .entropy import delta_min
from .exceptions import DomainError

ArrayLike = Union[int, float, np.ndarray]


def _check_noise(q: int, omega: float) -> float:
    if int(q) < 2:
        raise DomainError(f"alphabet size {q} must be at least 2")
    top = (q - 1) / q
    if not (-DOMAIN_SLACK <= omega <= top + DOMAIN_SLACK):
        raise DomainError(f"omega={omega} outside [0, {top}] for q={q}")
    return min(max(float(omega), 0.0), top)


def omega_perp(q: int, omega: float) -> float:
    """Fourier-dual noise (sqrt((q-1)(1-w)) - sqrt(w))^2 / q; an involution on [0, (q-1)/q]."""
    omega = _check_noise(q, omega)
    value = (math.sqrt((q - 1) * (1.0 - omega)) - math.sqrt(omega)) ** 2 / q
    return min(max(value, 0.0), (q - 1) / q)


def usd_success_prob(q: int, omega: float) -> float:
    """Optimal unambiguous discrimination of the q shifts of a noisy symbol: q w_perp / (q-1)."""
    return min(1.0, q * omega_perp(q, omega) / (q - 1))


def partial_usd_channel(omega: float, abort_prob: float) -> float:
    """Flip probability of the erasure-and-error channel produced by partial USD.

    Aborting with probability p leaves a binary symmetric channel of parameter
    (w_perp / (1 - p))_perp on the kept symbols, for p in [0, 1 - 2 w_perp].
    """
    dual = omega_perp(2, omega)
    top = 1.0 - 2.0 * dual
    if not (-DOMAIN_SLACK <= abort_prob <= top + DOMAIN_SLACK):
        raise DomainError(f"abort probability {abort_prob} outside [0, {top}]")
    abort_prob = min(max(abort_prob, 0.0), top)
    return omega_perp(2, min(0.5, dual / (1.0 - abort_prob)))


@dataclass(frozen=True)
class NoiseProfile:
    """q-ary symmetric Bernoulli noise of crossover probability omega."""
    q: int
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "omega", _check_noise(self.q, self.omega))

    @property
    def omega_perp(self) -> float:
        return omega_perp(self.q, self.omega)

    def dual(self) -> "NoiseProfile":
        return NoiseProfile(self.q, self.omega_perp)

    @property
    def usd_success(self) -> float:
        return usd_success_prob(self.q, self.omega)

    def symbol_amplitudes(self, b: int = 0) -> np.ndarray:
        """Amplitudes of the noisy symbol b: sqrt(1-w) at b, sqrt(w/(q-1)) elsewhere."""
        amplitudes = np.full(self.q, math.sqrt(self.omega / (self.q - 1)), dtype=np.float64)
        amplitudes[b] = math.sqrt(1.0 - self.omega)
        return amplitudes

    # f(e)^2 and f_hat(y)^2 depend on the weight only; log forms stay finite for large n
    def log_f_squared(self, t: ArrayLike, n: int) -> ArrayLike:
        t = np.asarray(t, dtype=np.float64)
        value = xlogy(n - t, 1.0 - self.omega) + xlogy(t, self.omega / (self.q - 1))
        return value if np.ndim(value) else float(value)

    def f_amplitude(self, t: ArrayLike, n: int) -> ArrayLike:
        value = np.exp(0.5 * np.asarray(self.log_f_squared(t, n)))
        return value if np.ndim(value) else float(value)

    def log_f_hat_squared(self, t: ArrayLike, n: int) -> ArrayLike:
        return self.dual().log_f_squared(t, n)

    def f_hat_amplitude(self, t: ArrayLike, n: int) -> ArrayLike:
        return self.dual().f_amplitude(t, n)

    def log_weight_class_probabilities(self, n: int) -> np.ndarray:
        """log Pr[|e| = t], t = 0..n: binom(n, t) (q-1)^t f(t)^2."""
        t = np.arange(n + 1, dtype=np.float64)
        log_binom = gammaln(n + 1) - gammaln(t + 1) - gammaln(n - t + 1)
        return log_binom + xlogy(t, self.q - 1) + np.asarray(self.log_f_squared(t, n))

    def total_f_squared(self, n: int) -> float:
        """sum over F_q^n of f(e)^2, accumulated in log space (equals 1)."""
        return float(np.exp(logsumexp(self.log_weight_class_probabilities(n))))


@dataclass(frozen=True)
class BinaryPhaseProfile:
    """Binary noise with a relative phase: sqrt(1-t)|b> + e^{i theta} sqrt(t)|1-b>."""
    t: float
    theta: float

    q = 2

    def __post_init__(self):
        if not (-DOMAIN_SLACK <= self.t <= 0.5 + DOMAIN_SLACK):
            raise DomainError(f"t={self.t} outside [0, 1/2]")
        if not (0.0 <= self.theta < 2 * math.pi + DOMAIN_SLACK):
            raise DomainError(f"theta={self.theta} outside [0, 2 pi)")
        object.__setattr__(self, "t", min(max(float(self.t), 0.0), 0.5))
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def overlap(self) -> float:
        return min(1.0, 2.0 * math.sqrt(self.t * (1.0 - self.t)) * abs(math.cos(self.theta)))

    @property
    def usd_success(self) -> float:
        return 1.0 - self.overlap

    @property
    def dual_flip_prob(self) -> float:
        """Probability of reading 1 after a Fourier transform of the b=0 state."""
        return 0.5 * (1.0 - 2.0 * math.sqrt(self.t * (1.0 - self.t)) * math.cos(self.theta))

    @property
    def flip_prob(self) -> float:
        return self.t

    def symbol_amplitudes(self, b: int = 0) -> np.ndarray:
        phase = complex(math.cos(self.theta), math.sin(self.theta))
        amplitudes = np.empty(2, dtype=np.complex128)
        amplitudes[b] = math.sqrt(1.0 - self.t)
        amplitudes[1 - b] = phase * math.sqrt(self.t)
        return amplitudes


@dataclass(frozen=True)
class ThresholdSet:
    """Noise bounds at rate R: easy (USD), tractable (PGM) and classical GV."""
    q: int
    rate: float
    easy_bound: float
    tractable_bound: float
    classical_bound: float

    def regime(self, omega: float) -> str:
        """'easy', 'hard' (no algorithm known) or 'intractable' for a noise level."""
        if omega < self.easy_bound:
            return "easy"
        if omega < self.tractable_bound:
            return "hard"
        return "intractable"

    def as_row(self) -> dict:
        return {
            "q": self.q,
            "R": self.rate,
            "easy": self.easy_bound,
            "classical": self.classical_bound,
            "tractable": self.tractable_bound,
        }


def thresholds(q: int, rate: float) -> ThresholdSet:
    if not 0.0 <= rate <= 1.0:
        raise DomainError(f"rate {rate} outside [0, 1]")
    easy = omega_perp(q, (q - 1) * rate / q)
    tractable = omega_perp(q, delta_min(q, 1.0 - rate))
    classical = delta_min(q, rate)
    return ThresholdSet(q=q, rate=rate, easy_bound=easy, tractable_bound=tractable, classical_bound=classical)

