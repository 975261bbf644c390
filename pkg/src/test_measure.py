"""Measurement primitives and the PGM spectrum against its dense oracle."""

import math

import numpy as np
import pytest

from codes import LinearCode, coset_spectra, coset_spectrum, random_code, repetition_code, zero_code
from gf import field_of_order
from measure import (
    DomainError,
    OutcomeKind,
    ParameterOrderError,
    efficient_usd_distribution,
    helstrom_flip_prob,
    helstrom_success,
    binary_usd_sample,
    partial_usd_isometry,
    partial_usd_keep_probability,
    partial_usd_measure_word,
    partial_usd_sample,
    pgm_dense_oracle,
    pgm_spectrum,
    pgm_spectrum_from_spectra,
    phase_usd_params,
    qary_usd_sample,
    usd_measure_word,
    usd_optimal_bound,
)
from noise import ERASURE, NoiseProfile, omega_perp

REPETITION_P_PGM = 0.98819


def test_helstrom():
    assert helstrom_success(0.0) == 1.0
    assert helstrom_success(1.0) == 0.5
    assert helstrom_success(0.6) == pytest.approx(0.9)
    assert helstrom_flip_prob(0.6) == pytest.approx(0.1)
    with pytest.raises(DomainError):
        helstrom_success(1.2)


def _success_rate(sampler, samples=100000):
    return sum(not sampler().is_abort for _ in range(samples)) / samples


def test_binary_usd_rates():
    rng = np.random.default_rng(0)
    assert _success_rate(lambda: binary_usd_sample(0.0, 1, rng), 1000) == 1.0
    assert _success_rate(lambda: binary_usd_sample(0.5, 1, rng), 1000) == 0.0
    assert _success_rate(lambda: binary_usd_sample(0.1, 0, rng)) == pytest.approx(0.4, abs=0.01)


def test_partial_usd_keep_probability():
    assert partial_usd_keep_probability(0.1, 0.05) == pytest.approx(0.7091, abs=1e-4)
    assert partial_usd_keep_probability(0.2, 0.2) == 1.0
    assert partial_usd_keep_probability(0.1, 0.0) == pytest.approx(2 * omega_perp(2, 0.1))
    with pytest.raises(ParameterOrderError):
        partial_usd_keep_probability(0.1, 0.2)


def test_partial_usd_sample_outcomes():
    rng = np.random.default_rng(1)
    outcomes = [partial_usd_sample(0.1, 0.05, 0, rng) for _ in range(100000)]
    kept = [outcome for outcome in outcomes if not outcome.is_abort]
    assert len(kept) / len(outcomes) == pytest.approx(0.7091, abs=0.01)
    assert all(outcome.kind is OutcomeKind.SYMBOL and outcome.post_noise == 0.05 for outcome in kept)


@pytest.mark.parametrize("omega,omega_prime", [
    (0.05, 0.01), (0.1, 0.05), (0.15, 0.1), (0.2, 0.05), (0.25, 0.2),
    (0.3, 0.1), (0.35, 0.3), (0.4, 0.2), (0.45, 0.4), (0.2, 0.2),
])
def test_partial_usd_three_way_frequencies(omega, omega_prime):
    samples = 100000
    rng = np.random.default_rng(int(1000 * omega + 10 * omega_prime))
    u = partial_usd_keep_probability(omega, omega_prime)
    measured = partial_usd_measure_word(omega, omega_prime, np.zeros(samples, dtype=np.int64), rng)
    observed = np.array([np.mean(measured == 0), np.mean(measured == 1), np.mean(measured == ERASURE)])
    expected = np.array([u * (1 - omega_prime), u * omega_prime, 1 - u])
    sigma = np.sqrt(expected * (1 - expected) / samples)
    assert np.all(np.abs(observed - expected) <= 4 * sigma + 1e-12)


def test_partial_usd_degenerate_cases():
    omega = 0.15
    assert partial_usd_keep_probability(omega, 0.0) == pytest.approx(1 - 2 * math.sqrt(omega * (1 - omega)))
    assert partial_usd_keep_probability(omega, omega) == 1.0


def test_qary_usd_rates():
    rng = np.random.default_rng(2)
    assert _success_rate(lambda: qary_usd_sample(NoiseProfile(3, 0.0), 2, rng), 1000) == 1.0
    profile = NoiseProfile(3, 0.2)
    assert profile.usd_success == pytest.approx(0.3343, abs=1e-4)
    assert _success_rate(lambda: qary_usd_sample(profile, 1, rng)) == pytest.approx(0.3343, abs=0.01)
    field = field_of_order(3)
    assert usd_optimal_bound(field, profile.symbol_amplitudes(0)) == pytest.approx(profile.usd_success)


def test_strict_usd_never_mislabels():
    rng = np.random.default_rng(3)
    wrong = 0
    for q in (2, 3, 4, 5):
        field = field_of_order(q)
        for omega in np.linspace(0.0, (q - 1) / q, 5):
            word = field.random_elements(rng, 50000)
            measured = usd_measure_word(NoiseProfile(q, float(omega)), word, rng)
            revealed = measured != ERASURE
            wrong += int(np.count_nonzero(measured[revealed] != word[revealed]))
    assert wrong == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_efficient_usd_distribution(q):
    field = field_of_order(q)
    profile = NoiseProfile(q, 0.4 * (q - 1) / q)
    for a in range(q):
        distribution = efficient_usd_distribution(field, profile, a)
        assert distribution.sum() == pytest.approx(1.0, abs=1e-12)
        assert distribution[a, 0] == pytest.approx(profile.usd_success, abs=1e-12)
        assert np.delete(distribution[:, 0], a).sum() == pytest.approx(0.0, abs=1e-12)


def test_partial_usd_isometry_preserves_overlaps():
    omega, omega_prime = 0.2, 0.05
    isometry = partial_usd_isometry(omega, omega_prime)
    overlap = float(isometry.images[0] @ isometry.images[1])
    assert overlap == pytest.approx(2 * math.sqrt(omega * (1 - omega)))
    assert np.linalg.norm(isometry.images, axis=1) == pytest.approx([1.0, 1.0])
    assert isometry.keep_probability == pytest.approx(partial_usd_keep_probability(omega, omega_prime))


def test_phase_usd_params():
    params = phase_usd_params(0.0, 1.0)
    assert params["overlap"] == 0.0 and params["usd_success"] == 1.0
    assert phase_usd_params(0.3, math.pi / 2)["dual_flip_prob"] == pytest.approx(0.5)
    assert phase_usd_params(0.3, 0.0)["dual_flip_prob"] == pytest.approx(omega_perp(2, 0.3))


def test_repetition_code_spectrum():
    code = repetition_code(field_of_order(2), 3)
    spectrum = pgm_spectrum(code, NoiseProfile(2, 0.1))
    assert spectrum.norms ** 2 == pytest.approx([0.608, 0.392])
    assert spectrum.p_pgm == pytest.approx(REPETITION_P_PGM, abs=1e-5)
    assert pgm_dense_oracle(code, NoiseProfile(2, 0.1)).success == pytest.approx(REPETITION_P_PGM, abs=1e-5)
    data = spectrum.to_dict()
    assert set(data) == {"q", "n", "k", "omega", "n_s", "p_pgm"}


def test_spectrum_limits():
    field = field_of_order(3)
    code = random_code(field, 5, 2, np.random.default_rng(4))
    assert pgm_spectrum(code, NoiseProfile(3, 0.0)).p_pgm == pytest.approx(1.0)
    indistinguishable = pgm_spectrum(code, NoiseProfile(3, 2 / 3))
    assert indistinguishable.p_pgm == pytest.approx(3.0 ** -code.rank)
    assert pgm_dense_oracle(zero_code(field, 3), NoiseProfile(3, 0.2)).success == pytest.approx(1.0)


def test_spectrum_norms_are_normalized():
    rng = np.random.default_rng(5)
    for q, n, k in ((2, 10, 5), (3, 6, 3)):
        code = random_code(field_of_order(q), n, k, rng)
        spectrum = pgm_spectrum(code, NoiseProfile(q, 0.1))
        assert spectrum.total_mass == pytest.approx(1.0, abs=1e-9)
        assert np.all(spectrum.norms >= 0)
        low, high = spectrum.opt_interval
        assert low <= high <= 1.0


def test_spectrum_does_not_depend_on_representatives():
    field = field_of_order(2)
    rng = np.random.default_rng(6)
    code = random_code(field, 8, 3, rng)
    table = coset_spectra(code)
    for index in np.flatnonzero(table.nonempty):
        representative = field.add(table.representatives[index], code.dual().random_codeword(rng))
        shifted = coset_spectrum(code, table.spectrum(index).syndrome, representative=representative)
        assert np.array_equal(shifted.weights, table.weights[index])
    assert pgm_spectrum_from_spectra(table, NoiseProfile(2, 0.1)).p_pgm == pytest.approx(
        pgm_spectrum(code, NoiseProfile(2, 0.1)).p_pgm)


def _oracle_instances(count):
    rng = np.random.default_rng(50)
    for index in range(count):
        q = 2 if index % 2 == 0 else 3
        n = int(rng.integers(3, 9 if q == 2 else 7))
        k = int(rng.integers(1, n))
        yield random_code(field_of_order(q), n, k, rng), NoiseProfile(q, float(rng.uniform(0.01, 0.6 * (q - 1) / q)))


@pytest.mark.slow
@pytest.mark.parametrize("code,profile", list(_oracle_instances(50)))
def test_pgm_formula_matches_dense_oracle(code, profile):
    oracle = pgm_dense_oracle(code, profile)
    assert pgm_spectrum(code, profile).p_pgm == pytest.approx(oracle.success, abs=1e-9)
    # per-codeword success is constant across the ensemble
    assert np.ptp(oracle.per_codeword) <= 1e-9


def test_pgm_formula_matches_dense_oracle_small():
    rng = np.random.default_rng(51)
    for q, n, k in ((2, 6, 3), (3, 4, 2)):
        code = random_code(field_of_order(q), n, k, rng)
        profile = NoiseProfile(q, 0.15)
        assert pgm_spectrum(code, profile).p_pgm == pytest.approx(pgm_dense_oracle(code, profile).success, abs=1e-9)


def test_rank_deficient_code_keeps_its_rank():
    field = field_of_order(2)
    code = LinearCode(field, [[1, 1, 0, 0], [1, 1, 0, 0]])
    spectrum = pgm_spectrum(code, NoiseProfile(2, 0.1))
    assert spectrum.rank == 1
    assert spectrum.p_pgm == pytest.approx(pgm_dense_oracle(code, NoiseProfile(2, 0.1)).success, abs=1e-9)
