"""Helstrom, strict and partial unambiguous discrimination of noisy symbols.

Probabilities come from the closed forms in omega_perp; the sampling
helpers only draw from the induced outcome distributions.
"""

import math
from typing import Union

import numpy as np

from gf import FiniteField
from noise import ERASURE, BinaryPhaseProfile, NoiseProfile, omega_perp
from noise.constants import DOMAIN_SLACK
from qstate import QuditState, noisy_symbol_state, qft_qudit

from .exceptions import DomainError, ParameterOrderError
from .types import PartialUsdIsometry, UsdOutcome

Profile = Union[NoiseProfile, BinaryPhaseProfile]


def _check_overlap(u: float) -> float:
    if not (-DOMAIN_SLACK <= u <= 1.0 + DOMAIN_SLACK):
        raise DomainError(f"overlap {u} outside [0, 1]")
    return min(max(float(u), 0.0), 1.0)


def helstrom_success(overlap: float) -> float:
    """1/2 + sqrt(1 - u^2)/2 for two equiprobable pure states with |<a|b>| = u."""
    u = _check_overlap(overlap)
    return 0.5 + 0.5 * math.sqrt(1.0 - u * u)


def helstrom_flip_prob(overlap: float) -> float:
    """Error rate of the coordinate-wise Helstrom measurement, seen as a BSC."""
    return 1.0 - helstrom_success(overlap)


def _check_binary(omega: float) -> float:
    if not (-DOMAIN_SLACK <= omega <= 0.5 + DOMAIN_SLACK):
        raise DomainError(f"binary noise {omega} outside [0, 1/2]")
    return min(max(float(omega), 0.0), 0.5)


def usd_sample_overlap(overlap: float, b: int, rng: np.random.Generator) -> UsdOutcome:
    """Strict USD of two states with overlap u: the right bit w.p. 1 - u, abort otherwise."""
    u = _check_overlap(overlap)
    if rng.random() < 1.0 - u:
        return UsdOutcome.found(b)
    return UsdOutcome.abort()


def binary_usd_sample(omega: float, b: int, rng: np.random.Generator) -> UsdOutcome:
    omega = _check_binary(omega)
    return usd_sample_overlap(2.0 * math.sqrt(omega * (1.0 - omega)), b, rng)


def partial_usd_keep_probability(omega: float, omega_prime: float) -> float:
    """u = omega_perp / omega'_perp, the chance partial USD keeps the coordinate."""
    omega = _check_binary(omega)
    omega_prime = _check_binary(omega_prime)
    if omega_prime > omega:
        raise ParameterOrderError(f"need omega'={omega_prime} <= omega={omega}")
    if omega_prime == omega:
        return 1.0
    return min(1.0, omega_perp(2, omega) / omega_perp(2, omega_prime))


def partial_usd_sample(omega: float, omega_prime: float, b: int, rng: np.random.Generator) -> UsdOutcome:
    """Keep w.p. u, leaving psi^{omega'}; the kept symbol then reads 1-b w.p. omega'."""
    keep = partial_usd_keep_probability(omega, omega_prime)
    if rng.random() >= keep:
        return UsdOutcome.abort()
    symbol = 1 - b if rng.random() < omega_prime else b
    return UsdOutcome.found(symbol, post_noise=omega_prime)


def qary_usd_sample(profile: NoiseProfile, b: int, rng: np.random.Generator) -> UsdOutcome:
    if rng.random() < profile.usd_success:
        return UsdOutcome.found(b)
    return UsdOutcome.abort()


def usd_measure_word(profile: Profile, word: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Strict USD on every coordinate: the symbol where it succeeds, ERASURE elsewhere."""
    word = np.asarray(word, dtype=np.int64)
    kept = rng.random(word.shape) < profile.usd_success
    return np.where(kept, word, ERASURE)


def partial_usd_measure_word(
    omega: float, omega_prime: float, word: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """Partial USD on every coordinate of a binary word, then a computational-basis read of the kept ones."""
    word = np.asarray(word, dtype=np.int64)
    keep = partial_usd_keep_probability(omega, omega_prime)
    kept = rng.random(word.shape) < keep
    flips = rng.random(word.shape) < omega_prime
    return np.where(kept, word ^ flips.astype(np.int64), ERASURE)


def phase_usd_params(t: float, theta: float) -> dict:
    profile = BinaryPhaseProfile(t, theta)
    return {
        "overlap": profile.overlap,
        "usd_success": profile.usd_success,
        "dual_flip_prob": profile.dual_flip_prob,
    }


def usd_optimal_bound(field: FiniteField, amplitudes: np.ndarray) -> float:
    """q min_y |f_hat(y)|^2: best strict-USD success over the shifts X_a |psi> of one qudit state."""
    state = QuditState(field, amplitudes)
    return float(field.q * np.min(qft_qudit(state).probabilities))


def efficient_usd_distribution(field: FiniteField, profile: NoiseProfile, a: int) -> np.ndarray:
    """Outcome distribution (symbol, flag) of the two-register USD circuit on |psi_a>|0>.

    The unitary scales the |0_hat> Fourier component by u on flag 0 and sends
    the rest of it to flag 1; flag 0 reads a w.p. q w_perp/(q-1) and never
    another symbol. Returns a (q, 2) array of probabilities.
    """
    q = field.q
    dual = profile.omega_perp
    u = min(1.0, math.sqrt(dual / ((1.0 - dual) * (q - 1))))
    transform = field.character_matrix() / math.sqrt(q)
    psi = noisy_symbol_state(field, profile, a).amplitudes
    fourier = transform.conj().T @ psi

    kept = fourier.copy()
    kept[0] *= u
    flagged = np.zeros_like(fourier)
    flagged[0] = fourier[0] * math.sqrt(max(0.0, 1.0 - u * u))

    distribution = np.empty((q, 2))
    distribution[:, 0] = np.abs(transform @ kept) ** 2
    distribution[:, 1] = np.abs(transform @ flagged) ** 2
    return distribution


def partial_usd_isometry(omega: float, omega_prime: float) -> PartialUsdIsometry:
    keep = partial_usd_keep_probability(omega, omega_prime)
    alpha, beta = math.sqrt(keep), math.sqrt(max(0.0, 1.0 - keep))
    images = np.zeros((2, 3), dtype=np.float64)
    for b in (0, 1):
        images[b, b] = alpha * math.sqrt(1.0 - omega_prime)
        images[b, 1 - b] = alpha * math.sqrt(omega_prime)
        images[b, 2] = beta
    return PartialUsdIsometry(omega, omega_prime, alpha, beta, images)
