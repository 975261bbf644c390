from .entropy import (
    bisect,
    delta_max,
    delta_max_or_one,
    delta_min,
    entropy_q,
    entropy_q_inv,
    hoeffding_tail,
)
from .profiles import (
    BinaryPhaseProfile,
    NoiseProfile,
    ThresholdSet,
    omega_perp,
    partial_usd_channel,
    thresholds,
    usd_success_prob,
)
from .channels import ChannelKind, channel_sample, sample_error, sample_error_array
from .constants import ERASURE
from .exceptions import DomainError, NoiseError

__all__ = [
    'NoiseProfile',
    'BinaryPhaseProfile',
    'ThresholdSet',
    'ChannelKind',

    'entropy_q',
    'entropy_q_inv',
    'delta_min',
    'delta_max',
    'delta_max_or_one',
    'bisect',
    'hoeffding_tail',
    'omega_perp',
    'usd_success_prob',
    'partial_usd_channel',
    'thresholds',
    'sample_error',
    'sample_error_array',
    'channel_sample',
    'ERASURE',

    'NoiseError',
    'DomainError',
]
