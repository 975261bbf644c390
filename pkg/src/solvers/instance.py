"""QDP instances and the single-use noisy codeword states handed to solvers."""

from typing import Optional, Sequence, Union

import numpy as np

from codes import LinearCode, random_code
from gf import FiniteField, field_of_order, vectors_from_indices
from noise import BinaryPhaseProfile, NoiseProfile, sample_error_array
from measure import partial_usd_keep_probability, partial_usd_measure_word, usd_measure_word

from .exceptions import StateConsumed, UnsupportedProfile
from .types import SolveOutcome

Profile = Union[NoiseProfile, BinaryPhaseProfile]


class NoisyCodewordState:
    """One copy of |psi_c>; any measurement consumes it.

    Solvers only see measurement outcomes; the codeword stays private.
    """

    def __init__(self, profile: Profile, codeword: np.ndarray, rng: np.random.Generator):
        self.profile = profile
        self._codeword = codeword
        self._rng = rng
        self._consumed = False

    @property
    def n(self) -> int:
        return int(self._codeword.size)

    def _consume(self) -> None:
        if self._consumed:
            raise StateConsumed("state already measured")
        self._consumed = True

    def measure_usd(self) -> np.ndarray:
        """Strict USD per coordinate; ERASURE where it aborts."""
        self._consume()
        return usd_measure_word(self.profile, self._codeword, self._rng)

    def measure_partial_usd(self, omega_prime: float) -> np.ndarray:
        """Partial USD per coordinate, kept coordinates then read in the computational basis."""
        omega = self._binary_omega()
        self._consume()
        return partial_usd_measure_word(omega, omega_prime, self._codeword, self._rng)

    def partial_usd_keep_mask(self, omega_prime: float) -> np.ndarray:
        """Partial USD without reading the kept registers (they are left in psi^{omega'})."""
        omega = self._binary_omega()
        self._consume()
        keep = partial_usd_keep_probability(omega, omega_prime)
        return self._rng.random(self.n) < keep

    def measure_computational(self) -> np.ndarray:
        """y = c + e."""
        self._consume()
        if isinstance(self.profile, BinaryPhaseProfile):
            flips = (self._rng.random(self.n) < self.profile.flip_prob).astype(np.int64)
            return self._codeword ^ flips
        field = field_of_order(self.profile.q)
        return field.add(self._codeword, sample_error_array(self.profile, self.n, self._rng))

    def measure_pgm(self, code: LinearCode, difference_probabilities: np.ndarray) -> np.ndarray:
        """Draw the PGM outcome c' = c - delta G, delta from the exact outcome distribution."""
        self._consume()
        if code.k == 0:
            return self._codeword.copy()
        field = code.field
        index = int(self._rng.choice(difference_probabilities.size, p=difference_probabilities))
        delta = vectors_from_indices(code.q, code.k, index)
        return field.sub(self._codeword, code.encode(delta))

    def _binary_omega(self) -> float:
        if not isinstance(self.profile, NoiseProfile) or self.profile.q != 2:
            raise UnsupportedProfile("partial USD needs binary Bernoulli noise")
        return self.profile.omega


class QdpInstance:
    """A random code, a hidden codeword c = mG and the noise applied to it."""

    def __init__(self, code: LinearCode, profile: Profile, message: np.ndarray, seed: int):
        if profile.q != code.q:
            raise UnsupportedProfile(f"profile over q={profile.q} used with a code over q={code.q}")
        self.code = code
        self.profile = profile
        self.seed = int(seed)
        self._message = np.asarray(message, dtype=np.int64).reshape(-1)
        self._codeword = code.encode(self._message) if code.k else np.zeros(code.n, dtype=np.int64)
        self._rng = np.random.default_rng(self.seed)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def q(self) -> int:
        return self.code.q

    def __repr__(self) -> str:
        return f"QdpInstance(q={self.q}, n={self.n}, k={self.k}, profile={self.profile}, seed={self.seed})"

    def prepare_state(self, rng: Optional[np.random.Generator] = None) -> NoisyCodewordState:
        return NoisyCodewordState(self.profile, self._codeword, rng or self._rng)

    def restrict(self, positions: Sequence[int], profile: Profile, seed: int) -> "QdpInstance":
        """The instance left on the coordinates J: code C_J, codeword c_J, new noise."""
        return QdpInstance(self.code.puncture(positions), profile, self._message, seed)

    def score(self, candidate: Optional[np.ndarray]) -> SolveOutcome:
        if candidate is None:
            return SolveOutcome.ABSTAIN
        if np.array_equal(np.asarray(candidate, dtype=np.int64), self._codeword):
            return SolveOutcome.RECOVERED
        return SolveOutcome.WRONG_CODEWORD


def _field(field: Union[FiniteField, int]) -> FiniteField:
    return field if isinstance(field, FiniteField) else field_of_order(field)


def _instance(field: FiniteField, n: int, k: int, profile: Profile, rng: np.random.Generator) -> QdpInstance:
    code = random_code(field, n, k, rng)
    message = field.random_elements(rng, k)
    seed = int(rng.integers(0, 2 ** 63 - 1))
    return QdpInstance(code, profile, message, seed)


def sample_instance(field: Union[FiniteField, int], n: int, k: int, omega: float, rng: np.random.Generator) -> QdpInstance:
    """Uniform G (k x n), uniform m, c = mG, Bernoulli noise omega."""
    field = _field(field)
    return _instance(field, n, k, NoiseProfile(field.q, omega), rng)


def sample_phase_instance(n: int, k: int, t: float, theta: float, rng: np.random.Generator) -> QdpInstance:
    """Binary instance whose symbols carry the phased noise sqrt(1-t)|b> + e^{i theta} sqrt(t)|1-b>."""
    return _instance(field_of_order(2), n, k, BinaryPhaseProfile(t, theta), rng)
