"""Short-codeword instances and the (C', omega') <-> (C, omega) convention switch.

The target code C' and relative weight omega' are what a caller asks for;
the reduction itself decodes on C = (C')^perp with noise omega = (omega')^perp.
"""

from functools import cached_property
from typing import Union

import numpy as np

from codes import LinearCode, random_code
from gf import FiniteField, field_of_order
from noise import NoiseProfile, omega_perp

from .exceptions import CodewordVerificationError


class ScpInstance:
    def __init__(self, target: LinearCode, omega_prime: float):
        self.target = target
        self.target_profile = NoiseProfile(target.q, omega_prime)

    @property
    def field(self) -> FiniteField:
        return self.target.field

    @property
    def q(self) -> int:
        return self.target.q

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def k_prime(self) -> int:
        return self.target.rank

    @property
    def omega_prime(self) -> float:
        return self.target_profile.omega

    @cached_property
    def code(self) -> LinearCode:
        """C = (C')^perp."""
        return self.target.dual()

    @property
    def k(self) -> int:
        return self.n - self.k_prime

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def omega(self) -> float:
        return omega_perp(self.q, self.omega_prime)

    @property
    def profile(self) -> NoiseProfile:
        return NoiseProfile(self.q, self.omega)

    @property
    def weight_bound(self) -> float:
        return self.omega_prime * self.n

    @property
    def prange_bound(self) -> float:
        """Relative weight (q-1)(n-k')/(qn) reached by linear-algebra search."""
        return (self.q - 1) * (self.n - self.k_prime) / (self.q * self.n)

    def __repr__(self) -> str:
        return f"ScpInstance(q={self.q}, n={self.n}, k'={self.k_prime}, omega'={self.omega_prime:.4f})"

    def verify(self, word: np.ndarray) -> None:
        """Raise unless word lies in C' (zero syndrome against the generator of C)."""
        if self.code.k and np.any(self.code.syndrome(word)):
            raise CodewordVerificationError("emitted word is not a codeword of the target code")


def sample_scp(
    field: Union[FiniteField, int], n: int, k_prime: int, omega_prime: float, rng: np.random.Generator
) -> ScpInstance:
    """Random target code C' of length n from a uniform k' x n generator."""
    field = field if isinstance(field, FiniteField) else field_of_order(field)
    return ScpInstance(random_code(field, n, k_prime, rng), omega_prime)
