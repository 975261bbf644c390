"""Entropy, the Fourier-dual noise map, thresholds and the binary channels."""

import math

import numpy as np
import pytest

from gf import field_of_order
from noise import (
    ERASURE,
    BinaryPhaseProfile,
    ChannelKind,
    DomainError,
    NoiseProfile,
    channel_sample,
    delta_max,
    delta_max_or_one,
    delta_min,
    entropy_q,
    entropy_q_inv,
    hoeffding_tail,
    omega_perp,
    partial_usd_channel,
    sample_error,
    thresholds,
    usd_success_prob,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", ORDERS)
def test_entropy_endpoints(q):
    assert entropy_q(q, (q - 1) / q) == pytest.approx(1.0, abs=1e-12)
    assert entropy_q(q, 0.0) == 0.0
    assert entropy_q_inv(q, 1.0) == pytest.approx((q - 1) / q)


def test_binary_gilbert_varshamov_values():
    assert entropy_q_inv(2, 0.5) == pytest.approx(0.1100, abs=1e-4)
    assert delta_min(2, 0.5) == pytest.approx(0.1100, abs=1e-4)
    assert delta_max(2, 0.5) == pytest.approx(0.8900, abs=1e-4)
    assert delta_min(3, 0.0) == pytest.approx(2 / 3)


def test_delta_max_undefined_below_floor():
    # log_3(2) ~ 0.63, so rate 0.3 has no solution in [2/3, 1]
    assert delta_max(3, 0.3) is None
    assert delta_max_or_one(3, 0.3) == 1.0


def test_entropy_domain():
    with pytest.raises(DomainError):
        entropy_q(2, 1.5)
    with pytest.raises(DomainError):
        entropy_q(1, 0.5)


@pytest.mark.parametrize("q", ORDERS)
def test_omega_perp_is_a_decreasing_involution(q):
    grid = np.linspace(0.0, (q - 1) / q, 1000)
    dual = np.array([omega_perp(q, float(w)) for w in grid])
    back = np.array([omega_perp(q, float(w)) for w in dual])
    assert np.max(np.abs(back - grid)) <= 1e-12
    assert np.all(np.diff(dual) <= 1e-15)
    assert omega_perp(q, 0.0) == pytest.approx((q - 1) / q)
    assert omega_perp(q, (q - 1) / q) == pytest.approx(0.0, abs=1e-15)


def test_binary_omega_perp_closed_form():
    assert omega_perp(2, 0.1) == pytest.approx(0.2, abs=1e-15)
    for x in np.linspace(0.0, 0.5, 101):
        assert omega_perp(2, float(x)) == pytest.approx((1 - 2 * math.sqrt(x * (1 - x))) / 2, abs=1e-14)


def test_omega_perp_domain():
    with pytest.raises(DomainError):
        omega_perp(2, 0.6)


def test_usd_success_values():
    assert usd_success_prob(2, 0.0) == 1.0
    assert usd_success_prob(2, 0.1) == pytest.approx(0.4)
    assert usd_success_prob(2, 0.5) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("q,n", [(2, 10), (3, 40), (5, 64)])
def test_weight_class_mass_sums_to_one(q, n):
    profile = NoiseProfile(q, 0.3 * (q - 1) / q)
    assert profile.total_f_squared(n) == pytest.approx(1.0, abs=1e-10)


def test_f_hat_matches_dual_profile():
    profile = NoiseProfile(3, 0.2)
    assert profile.f_hat_amplitude(2, 5) == pytest.approx(NoiseProfile(3, profile.omega_perp).f_amplitude(2, 5))
    assert profile.log_f_squared(0, 4) == pytest.approx(4 * math.log(0.8))


def test_thresholds_half_rate_binary():
    bounds = thresholds(2, 0.5)
    assert bounds.easy_bound == pytest.approx(0.0670, abs=1e-4)
    assert bounds.classical_bound == pytest.approx(0.1100, abs=1e-4)
    assert bounds.tractable_bound == pytest.approx(0.1871, abs=1e-4)
    assert bounds.regime(0.05) == "easy"
    assert bounds.regime(0.15) == "hard"
    assert bounds.regime(0.3) == "intractable"
    assert list(bounds.as_row()) == ["q", "R", "easy", "classical", "tractable"]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_threshold_ordering_and_limits(q):
    top = (q - 1) / q
    for rate in np.linspace(0.01, 0.99, 99):
        bounds = thresholds(q, float(rate))
        assert 0.0 <= bounds.easy_bound <= bounds.tractable_bound + 1e-12 <= top + 1e-12
    low, high = thresholds(q, 0.0), thresholds(q, 1.0)
    assert low.easy_bound == pytest.approx(top) and low.tractable_bound == pytest.approx(top)
    assert low.classical_bound == pytest.approx(top)
    assert high.easy_bound == pytest.approx(0.0, abs=1e-9)
    assert high.tractable_bound == pytest.approx(0.0, abs=1e-9)
    assert high.classical_bound == pytest.approx(0.0, abs=1e-9)


def test_sample_error_statistics():
    rng = np.random.default_rng(0)
    assert sample_error(NoiseProfile(3, 0.0), 50, rng).weight == 0
    error = sample_error(NoiseProfile(2, 0.25), 100000, rng, field=field_of_order(2))
    assert error.weight / 100000 == pytest.approx(0.25, abs=0.005)
    with pytest.raises(DomainError):
        sample_error(NoiseProfile(2, 0.1), 4, rng, field=field_of_order(3))


def test_channels():
    rng = np.random.default_rng(1)
    assert np.all(channel_sample(ChannelKind.BEC, 1, {"p": 1.0}, rng, size=100) == ERASURE)
    out = channel_sample("bseec", 0, {"omega": 0.2, "p": 0.3}, rng, size=200000)
    assert np.mean(out == ERASURE) == pytest.approx(0.3, abs=0.005)
    assert np.mean(out == 1) == pytest.approx(0.7 * 0.2, abs=0.005)
    assert np.mean(out == 0) == pytest.approx(0.7 * 0.8, abs=0.005)
    bsc = channel_sample(ChannelKind.BSC, 1, {"omega": 0.1}, rng, size=200000)
    assert not np.any(bsc == ERASURE)
    assert np.mean(bsc == 0) == pytest.approx(0.1, abs=0.005)
    with pytest.raises(DomainError):
        channel_sample(ChannelKind.BSC, 2, {"omega": 0.1}, rng)
    with pytest.raises(DomainError):
        channel_sample(ChannelKind.BSEEC, 0, {"omega": 0.1}, rng)


def test_partial_usd_channel_endpoints():
    omega = 0.1
    assert partial_usd_channel(omega, 0.0) == pytest.approx(omega)
    assert partial_usd_channel(omega, 1 - 2 * omega_perp(2, omega)) == pytest.approx(0.0, abs=1e-12)


def test_phase_profile():
    for t in np.linspace(0.0, 0.5, 11):
        assert BinaryPhaseProfile(float(t), math.pi / 2).dual_flip_prob == pytest.approx(0.5, abs=1e-15)
        assert BinaryPhaseProfile(float(t), 0.0).dual_flip_prob == pytest.approx(omega_perp(2, float(t)), abs=1e-12)
    profile = BinaryPhaseProfile(0.1, math.pi / 3)
    assert profile.overlap == pytest.approx(2 * math.sqrt(0.09) * 0.5)
    assert profile.usd_success == pytest.approx(1 - profile.overlap)
    with pytest.raises(DomainError):
        BinaryPhaseProfile(0.7, 0.0)


def test_hoeffding_tail():
    assert hoeffding_tail(100, 0.1) == pytest.approx(math.exp(-2.0))
