"""Single-qudit states over F_q and the operators acting on them."""

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from gf import FiniteField
from noise import BinaryPhaseProfile, NoiseProfile

from .constants import QUDIT_NORM_TOLERANCE
from .exceptions import DimensionMismatch, NormalizationError


@dataclass(frozen=True, eq=False)
class QuditState:
    """A unit vector of C^q, amplitude i on the basis state of element i."""
    field: FiniteField
    amplitudes: np.ndarray = dataclass_field(repr=False)

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.size != self.field.q:
            raise DimensionMismatch(f"{amplitudes.size} amplitudes for GF({self.field.descriptor})")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > QUDIT_NORM_TOLERANCE:
            raise NormalizationError(f"qudit state has squared norm {norm}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def basis(cls, field: FiniteField, b: int) -> "QuditState":
        field.validate(b)
        amplitudes = np.zeros(field.q, dtype=np.complex128)
        amplitudes[b] = 1.0
        return cls(field, amplitudes)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def allclose(self, other: "QuditState", atol: float = 1e-12) -> bool:
        return self.field == other.field and np.allclose(self.amplitudes, other.amplitudes, atol=atol, rtol=0)


def noisy_symbol_state(field: FiniteField, profile, b: int) -> QuditState:
    """|psi_b>: sqrt(1-w) on b and sqrt(w/(q-1)) on every other symbol.

    A BinaryPhaseProfile gives the phased binary variant instead.
    """
    field.validate(b)
    if profile.q != field.q:
        raise DimensionMismatch(f"profile over q={profile.q} used with GF({field.descriptor})")
    if not isinstance(profile, (NoiseProfile, BinaryPhaseProfile)):
        raise TypeError(f"unsupported noise profile {type(profile).__name__}")
    return QuditState(field, profile.symbol_amplitudes(int(b)))


def symbol_characters(field: FiniteField, b: int) -> np.ndarray:
    """chi_x(b) for every x in F_q."""
    return np.asarray(field.phase(field.trace(field.mul(field.elements, b))), dtype=np.complex128)


def qft_qudit(state: QuditState) -> QuditState:
    """a_hat(y) = q^{-1/2} sum_x chi_y(x) a(x)."""
    field = state.field
    return QuditState(field, field.character_matrix() @ state.amplitudes / np.sqrt(field.q))


def qft_qudit_inverse(state: QuditState) -> QuditState:
    field = state.field
    return QuditState(field, field.character_matrix().conj() @ state.amplitudes / np.sqrt(field.q))


def shift_qudit(state: QuditState, b: int) -> QuditState:
    """X_b |x> = |x + b>."""
    field = state.field
    source = field.sub(field.elements, int(b))
    return QuditState(field, state.amplitudes[source])


def phase_qudit(state: QuditState, b: int) -> QuditState:
    """Z_b |x> = chi_x(b) |x>."""
    field = state.field
    return QuditState(field, state.amplitudes * symbol_characters(field, int(b)))
