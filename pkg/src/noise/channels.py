"""Bernoulli error sampling and the binary channels BSC, BEC and BSEEC."""

from enum import Enum
from typing import Mapping, Optional, Union

import numpy as np

from gf import FieldVector, FiniteField, field_of_order

from .constants import ERASURE
from .exceptions import DomainError
from .profiles import NoiseProfile


class ChannelKind(Enum):
    BSC = "bsc"
    BEC = "bec"
    BSEEC = "bseec"


def sample_error(
    profile: NoiseProfile,
    n: int,
    rng: np.random.Generator,
    field: Optional[FiniteField] = None,
) -> FieldVector:
    """e ~ B(q, n, omega): each coordinate nonzero w.p. omega, uniform over F_q^* when it is."""
    field = field or field_of_order(profile.q)
    if field.q != profile.q:
        raise DomainError(f"profile alphabet {profile.q} does not match GF({field.descriptor})")
    return FieldVector(field, sample_error_array(profile, n, rng))


def sample_error_array(profile: NoiseProfile, size, rng: np.random.Generator) -> np.ndarray:
    """Raw Bernoulli errors of any shape, for vectorised trial code."""
    mask = rng.random(size) < profile.omega
    values = rng.integers(1, profile.q, size=size, dtype=np.int64)
    return np.where(mask, values, 0)


def _probability(params: Mapping[str, float], key: str) -> float:
    if key not in params:
        raise DomainError(f"channel parameter {key!r} missing")
    value = float(params[key])
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"channel parameter {key}={value} outside [0, 1]")
    return value


def channel_sample(
    kind: Union[ChannelKind, str],
    b: Union[int, np.ndarray],
    params: Mapping[str, float],
    rng: np.random.Generator,
    size=None,
) -> Union[int, np.ndarray]:
    """Pass bit(s) b through a binary channel; erasures come back as ERASURE.

    params:
        BSC:   {"omega": flip probability}
        BEC:   {"p": erasure probability}
        BSEEC: {"omega": flip probability, "p": erasure probability}; flips
               apply to the unerased outputs only.
    """
    kind = ChannelKind(kind)
    bits = np.asarray(b, dtype=np.int64)
    if np.any((bits != 0) & (bits != 1)):
        raise DomainError("binary channels take bits")
    shape = bits.shape if size is None else size
    bits = np.broadcast_to(bits, shape)

    omega = _probability(params, "omega") if kind in (ChannelKind.BSC, ChannelKind.BSEEC) else 0.0
    erase = _probability(params, "p") if kind in (ChannelKind.BEC, ChannelKind.BSEEC) else 0.0

    draws = rng.random(shape)
    out = np.where(draws < erase, ERASURE, bits)
    flips = rng.random(shape) < omega
    out = np.where((out != ERASURE) & flips, 1 - out, out)
    return out if np.ndim(out) else int(out)
