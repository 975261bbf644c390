import math

import numpy as np
import pytest

from codes import full_code, repetition_code
from gf import field_of_order, vectors_from_indices
from measure import fourier_codeword_states, pgm_dense_oracle, pgm_spectrum
from noise import delta_min, omega_perp
from regev import (
    CodewordVerificationError,
    InfeasibleReduction,
    ReductionOutcome,
    ReductionVariant,
    ScpInstance,
    compare_prange,
    pgm_counterexample_run,
    pgm_final_distribution,
    pgm_tweaked_distribution,
    reduce_pgm_path,
    reduce_usd_path,
    sample_scp,
    sample_usd_path_raw,
    tweaked_branch_probability,
    usd_path_exact_distribution,
    usd_path_parameters,
)


def test_convention_switch():
    rng = np.random.default_rng(0)
    scp = sample_scp(3, 12, 4, 0.3, rng)
    assert scp.k == 8
    assert scp.rate == pytest.approx(8 / 12)
    assert scp.omega == pytest.approx(omega_perp(3, 0.3))
    assert scp.code.same_code(scp.target.dual())
    assert scp.weight_bound == pytest.approx(3.6)
    assert scp.prange_bound == pytest.approx(2 * 8 / 36)
    assert not np.any(scp.field.matmul(scp.target.generator, scp.code.generator.T))


def test_verify_rejects_non_codewords():
    scp = ScpInstance(repetition_code(field_of_order(2), 4), 0.3)
    scp.verify(np.array([1, 1, 1, 1]))
    scp.verify(np.zeros(4, dtype=np.int64))
    with pytest.raises(CodewordVerificationError):
        scp.verify(np.array([1, 0, 0, 0]))


def test_usd_path_needs_p_usd_above_rate():
    scp = sample_scp(2, 40, 20, 0.2, np.random.default_rng(3))
    with pytest.raises(InfeasibleReduction):
        reduce_usd_path(scp, np.random.default_rng(4))
    p_usd, epsilon = usd_path_parameters(sample_scp(2, 40, 20, 0.3, np.random.default_rng(3)))
    assert p_usd == pytest.approx(0.6)
    assert epsilon == pytest.approx(0.05)


def test_usd_path_emits_target_codewords():
    rng = np.random.default_rng(5)
    scp = sample_scp(2, 100, 50, 0.3, rng)
    for _ in range(10):
        report = reduce_usd_path(scp, rng)
        assert report.outcome in (ReductionOutcome.CODEWORD, ReductionOutcome.ZERO, ReductionOutcome.ABORT)
        if report.outcome is ReductionOutcome.CODEWORD:
            assert scp.target.contains(report.codeword)
            assert 0 < report.weight <= report.j_size
            assert (0.5 + 0.05) * 100 <= report.j_size <= 60


@pytest.mark.slow
def test_usd_path_reaches_the_prange_bound():
    rng = np.random.default_rng(6)
    scp = sample_scp(2, 1000, 500, 0.255, rng)
    reports = [reduce_usd_path(scp, rng) for _ in range(100)]
    weights = [report.weight / 1000 for report in reports if report.outcome is ReductionOutcome.CODEWORD]
    assert sum(0.20 <= weight <= 0.26 for weight in weights) >= 30
    assert np.mean(weights) == pytest.approx(0.25, rel=0.02)


def test_usd_path_sampler_matches_the_exact_distribution():
    rng = np.random.default_rng(7)
    scp = sample_scp(2, 4, 2, 0.4, rng)
    exact = usd_path_exact_distribution(scp)
    assert sum(exact.values()) == pytest.approx(1.0, abs=1e-12)
    samples = 40000
    counts = sample_usd_path_raw(scp, rng, samples)
    keys = set(exact) | set(counts)
    total_variation = 0.5 * sum(abs(exact.get(key, 0.0) - counts.get(key, 0) / samples) for key in keys)
    assert total_variation <= 0.03


def test_plain_pgm_path_mostly_measures_zero():
    rng = np.random.default_rng(8)
    p0 = []
    for _ in range(20):
        scp = sample_scp(2, 16, 8, 0.02, rng)
        distribution = pgm_final_distribution(scp.code, scp.profile)
        assert distribution.p.sum() == pytest.approx(1.0, abs=1e-12)
        assert distribution.branch_probability == pytest.approx(distribution.p_pgm)
        p0.append(distribution.p0)
    assert np.median(p0) >= 0.99


def test_tweaked_pgm_path_concentrates_near_the_target_weight():
    rng = np.random.default_rng(9)
    omega_prime = 0.12
    assert omega_prime > delta_min(2, 0.5)
    masses = []
    for _ in range(20):
        scp = sample_scp(2, 16, 8, omega_prime, rng)
        distribution = pgm_tweaked_distribution(scp.code, scp.profile)
        assert distribution.p0 == 0.0
        assert distribution.p.sum() == pytest.approx(1.0, abs=1e-12)
        masses.append(distribution.mass_within(omega_prime, 0.15))
    assert np.mean(masses) >= 0.9


def test_counterexample_branch_probability():
    rng = np.random.default_rng(10)
    for _ in range(5):
        scp = sample_scp(2, 16, 8, 0.2, rng)
        spectrum = pgm_spectrum(scp.code, scp.profile)
        report = pgm_counterexample_run(scp.code, scp.profile)
        expected = (math.sqrt(spectrum.p_pgm) - spectrum.n0 / math.sqrt(2.0 ** spectrum.rank)) ** 2
        assert report.outcome is ReductionOutcome.BOTTOM
        assert report.codeword is None
        assert report.branch_probability == pytest.approx(expected, abs=1e-12)
        assert report.details["complement"] == pytest.approx(1.0 - expected, abs=1e-12)
        assert tweaked_branch_probability(spectrum) == pytest.approx(
            (spectrum.norms[1:].sum()) ** 2 / 2.0 ** spectrum.rank, abs=1e-12)


def test_counterexample_branch_matches_dense_states():
    rng = np.random.default_rng(17)
    for _ in range(3):
        scp = sample_scp(2, 10, 5, 0.2, rng)
        code, profile = scp.code, scp.profile
        oracle = pgm_dense_oracle(code, profile)
        # amplitudes of QFT|psi_0> on y in C^perp give n_0 without the coset tables
        amplitudes = fourier_codeword_states(code, profile)[:, 0]
        words = vectors_from_indices(2, code.n, np.arange(2 ** code.n))
        in_dual = ~np.any(code.field.matmul(words, code.generator.T), axis=1)
        n0 = math.sqrt(float(np.sum(np.abs(amplitudes[in_dual]) ** 2)))
        expected = (math.sqrt(oracle.success) - n0 / math.sqrt(2.0 ** code.rank)) ** 2
        report = pgm_counterexample_run(code, profile)
        assert report.branch_probability == pytest.approx(expected, abs=1e-9)
        assert report.details["qdp_success"] == pytest.approx(expected, abs=1e-9)
        assert report.details["p_pgm"] == pytest.approx(oracle.success, abs=1e-9)


def test_counterexample_with_sampled_branch():
    scp = sample_scp(2, 10, 5, 0.2, np.random.default_rng(11))
    rng = np.random.default_rng(12)
    outcomes = {pgm_counterexample_run(scp.code, scp.profile, rng).outcome for _ in range(200)}
    assert outcomes <= {ReductionOutcome.BOTTOM, ReductionOutcome.ABORT}


def test_reduce_pgm_path_emits_verified_words():
    rng = np.random.default_rng(13)
    scp = sample_scp(2, 14, 7, 0.2, rng)
    for variant in (ReductionVariant.PGM_PLAIN, ReductionVariant.PGM_TWEAKED):
        for _ in range(50):
            report = reduce_pgm_path(scp, rng, variant)
            if report.outcome is ReductionOutcome.CODEWORD:
                assert scp.target.contains(report.codeword)
            if variant is ReductionVariant.PGM_TWEAKED:
                assert report.outcome is not ReductionOutcome.ZERO
    with pytest.raises(ValueError):
        reduce_pgm_path(scp, rng, ReductionVariant.USD_PATH)


def test_compare_prange_binary():
    rng = np.random.default_rng(14)
    scp = sample_scp(2, 200, 100, 0.3, rng)
    comparison = compare_prange(scp, rng, trials=10)
    assert comparison.target_weight == 50
    assert comparison.prange_hits >= 9
    assert comparison.prange[50] >= comparison.prange_hits
    usd_weights = [weight for weight, count in comparison.usd_path.items() for _ in range(count)]
    assert abs(np.mean(usd_weights) - 50) <= 15
    assert all(len(row) == 3 for row in comparison.rows())


def test_compare_prange_ternary():
    rng = np.random.default_rng(15)
    scp = sample_scp(3, 120, 60, 0.35, rng)
    comparison = compare_prange(scp, rng, trials=10)
    assert comparison.target_weight == 40
    usd_weights = [weight for weight, count in comparison.usd_path.items() for _ in range(count)]
    assert abs(np.mean(usd_weights) - 40) <= 12


def test_compare_prange_flags_a_degenerate_dual():
    scp = ScpInstance(full_code(field_of_order(2), 10), 0.3)
    comparison = compare_prange(scp, np.random.default_rng(16), trials=3)
    assert comparison.degenerate_dual
    assert comparison.usd_trials == 0
