"""Oracle battery run by `verify`: closed forms checked against brute force at desk scale.

Each check returns (passed, detail) and never raises for a numerical mismatch;
errors inside a check are reported as failures of that check.
"""

import math
from typing import Callable, List, Tuple

import numpy as np

from codes import NoHit, coset_spectra, prange_short_codeword, random_code, repetition_code
from gf import field_of_order, parse_field
from measure import (
    partial_usd_keep_probability,
    partial_usd_measure_word,
    pgm_dense_oracle,
    pgm_spectrum,
    usd_measure_word,
)
from noise import ERASURE, BinaryPhaseProfile, NoiseProfile, omega_perp
from qstate import noisy_symbol_state, qft_qudit
from regev import ScpInstance, sample_usd_path_raw, usd_path_exact_distribution
from utils.logging_config import get_logger, log_event
from utils.rng import spawn_rngs

from .types import CheckResult

logger = get_logger(__name__)

DUAL_FIELDS = (2, 3, 4, 5, 7, 8, 9)
CHARACTER_FIELDS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
REPETITION_P_PGM = 0.98819

Check = Callable[[np.random.Generator], Tuple[bool, str]]


def check_dual_involution(rng: np.random.Generator) -> Tuple[bool, str]:
    worst = 0.0
    for q in DUAL_FIELDS:
        for omega in np.linspace(0.0, (q - 1) / q, 1000):
            worst = max(worst, abs(omega_perp(q, omega_perp(q, float(omega))) - omega))
    return worst <= 1e-12, f"max error {worst:.3e}"


def check_qudit_fourier_profile(rng: np.random.Generator) -> Tuple[bool, str]:
    failures = []
    for q in DUAL_FIELDS:
        field = field_of_order(q)
        for omega in np.linspace(0.0, (q - 1) / q, 11):
            profile = NoiseProfile(q, float(omega))
            transformed = qft_qudit(noisy_symbol_state(field, profile, 0))
            if not transformed.allclose(noisy_symbol_state(field, profile.dual(), 0), atol=1e-12):
                failures.append(f"q={q},omega={omega:.3f}")
    return not failures, ", ".join(failures) or "QFT maps omega to omega_perp"


def check_character_orthogonality(rng: np.random.Generator) -> Tuple[bool, str]:
    worst = 0.0
    for q in CHARACTER_FIELDS:
        matrix = field_of_order(q).character_matrix()
        worst = max(worst, float(np.max(np.abs(matrix @ matrix.conj().T - q * np.eye(q)))))
    return worst <= 1e-9, f"max deviation {worst:.3e}"


def check_usd_soundness(rng: np.random.Generator) -> Tuple[bool, str]:
    wrong, samples = 0, 0
    for q in (2, 3, 5):
        field = field_of_order(q)
        for omega in (0.05, 0.2, 0.4):
            if omega > (q - 1) / q:
                continue
            word = field.random_elements(rng, 20000)
            measured = usd_measure_word(NoiseProfile(q, omega), word, rng)
            revealed = measured != ERASURE
            wrong += int(np.count_nonzero(measured[revealed] != word[revealed]))
            samples += word.size
    return wrong == 0, f"{wrong} wrong symbols in {samples} samples"


def check_partial_usd_frequencies(rng: np.random.Generator) -> Tuple[bool, str]:
    samples = 100000
    worst = 0.0
    for omega, omega_prime in ((0.1, 0.05), (0.2, 0.1), (0.3, 0.15), (0.25, 0.25), (0.4, 0.0)):
        u = partial_usd_keep_probability(omega, omega_prime)
        measured = partial_usd_measure_word(omega, omega_prime, np.zeros(samples, dtype=np.int64), rng)
        observed = np.array([np.mean(measured == 0), np.mean(measured == 1), np.mean(measured == ERASURE)])
        expected = np.array([u * (1 - omega_prime), u * omega_prime, 1 - u])
        sigma = np.sqrt(np.maximum(expected * (1 - expected), 1e-12) / samples)
        worst = max(worst, float(np.max(np.abs(observed - expected) / sigma)))
    return worst <= 4.0, f"largest deviation {worst:.2f} sigma"


def check_pgm_formula(rng: np.random.Generator) -> Tuple[bool, str]:
    worst = 0.0
    for q, n, k in ((2, 8, 4), (2, 6, 3), (3, 5, 2)):
        field = field_of_order(q)
        for _ in range(3):
            code = random_code(field, n, k, rng)
            profile = NoiseProfile(q, float(rng.uniform(0.02, 0.3)))
            worst = max(worst, abs(pgm_spectrum(code, profile).p_pgm - pgm_dense_oracle(code, profile).success))
    return worst <= 1e-9, f"max |formula - dense| {worst:.3e}"


def check_repetition_code(rng: np.random.Generator) -> Tuple[bool, str]:
    code = repetition_code(parse_field("2^1"), 3)
    profile = NoiseProfile(2, 0.1)
    formula = pgm_spectrum(code, profile).p_pgm
    dense = pgm_dense_oracle(code, profile).success
    passed = abs(formula - REPETITION_P_PGM) <= 1e-5 and abs(dense - REPETITION_P_PGM) <= 1e-5
    return passed, f"formula {formula:.6f}, dense {dense:.6f}"


def check_coset_partition(rng: np.random.Generator) -> Tuple[bool, str]:
    field = field_of_order(3)
    code = random_code(field, 6, 3, rng)
    table = coset_spectra(code)
    sizes = table.weights.sum(axis=1)
    expected = 3 ** code.dimension_of_dual
    passed = (int(np.count_nonzero(table.nonempty)) == 3 ** code.rank
              and np.all(sizes[table.nonempty] == expected)
              and np.all(sizes[~table.nonempty] == 0)
              and int(sizes.sum()) == 3 ** code.n)
    return bool(passed), f"{int(np.count_nonzero(table.nonempty))} nonempty shifted duals of size {expected}"


def check_prange_soundness(rng: np.random.Generator) -> Tuple[bool, str]:
    field = field_of_order(2)
    parity_check = field.random_elements(rng, (20, 40))
    try:
        result = prange_short_codeword(field, parity_check, rng)
    except NoHit as err:
        return True, f"no hit in {err.result.rounds} rounds"
    word = result.codeword
    passed = not np.any(field.matmul(parity_check, word)) and int(np.count_nonzero(word)) == result.target_weight
    return passed, f"hit weight {result.target_weight} after {result.rounds} rounds"


def check_usd_path_sampler(rng: np.random.Generator) -> Tuple[bool, str]:
    field = field_of_order(2)
    scp = ScpInstance(random_code(field, 4, 2, rng), 0.4)
    exact = usd_path_exact_distribution(scp)
    samples = 40000
    counts = sample_usd_path_raw(scp, rng, samples)
    keys = set(exact) | set(counts)
    distance = 0.5 * sum(abs(exact.get(key, 0.0) - counts.get(key, 0) / samples) for key in keys)
    return distance <= 0.03, f"total variation {distance:.4f}"


def check_phase_profile(rng: np.random.Generator) -> Tuple[bool, str]:
    worst_half, worst_real = 0.0, 0.0
    for t in np.linspace(0.0, 0.5, 26):
        worst_half = max(worst_half, abs(BinaryPhaseProfile(float(t), math.pi / 2).dual_flip_prob - 0.5))
        worst_real = max(worst_real, abs(BinaryPhaseProfile(float(t), 0.0).dual_flip_prob - omega_perp(2, float(t))))
    return worst_half <= 1e-15 and worst_real <= 1e-12, f"theta=pi/2 {worst_half:.1e}, theta=0 {worst_real:.1e}"


CHECKS: List[Tuple[str, Check]] = [
    ("fourier_dual_involution", check_dual_involution),
    ("qudit_fourier_profile", check_qudit_fourier_profile),
    ("character_orthogonality", check_character_orthogonality),
    ("usd_soundness", check_usd_soundness),
    ("partial_usd_frequencies", check_partial_usd_frequencies),
    ("pgm_formula_vs_dense", check_pgm_formula),
    ("repetition_code_pgm", check_repetition_code),
    ("coset_partition", check_coset_partition),
    ("prange_soundness", check_prange_soundness),
    ("usd_path_sampler_vs_dense", check_usd_path_sampler),
    ("phase_profile", check_phase_profile),
]


def run_checks(seed: int, checks: List[Tuple[str, Check]] = None) -> List[CheckResult]:
    """Every check on its own child stream of `seed`."""
    checks = CHECKS if checks is None else checks
    results = []
    for (name, check), rng in zip(checks, spawn_rngs(seed, len(checks))):
        try:
            passed, detail = check(rng)
        except Exception as err:
            passed, detail = False, f"{type(err).__name__}: {err}"
        result = CheckResult(name, bool(passed), detail)
        log_event(
            logger, "info" if result.passed else "error", f"{name}: {'pass' if passed else 'FAIL'}",
            event_type="verify", extra={"check": name, "passed": result.passed, "detail": detail},
        )
        results.append(result)
    return results
