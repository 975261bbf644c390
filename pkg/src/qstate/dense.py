"""Dense q^n-dimensional states, used as brute-force oracles at small n.

Amplitudes are indexed little-endian: the basis vector x sits at index
sum_j x_j q^j, so coordinate 0 varies fastest. As a C-ordered tensor of
shape (q,) * n, coordinate j is axis n - 1 - j.
"""

import json
from dataclasses import dataclass, field as dataclass_field
from functools import reduce
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from codes import LinearCode
from gf import FiniteField, indices_from_vectors
from utils.budget import check_budget

from .constants import DENSE_NORM_TOLERANCE, DENSE_STATE_BUDGET
from .exceptions import DimensionMismatch, NormalizationError
from .qudit import QuditState, noisy_symbol_state, phase_qudit, shift_qudit, symbol_characters


@dataclass(frozen=True, eq=False)
class DenseState:
    field: FiniteField
    n: int
    amplitudes: np.ndarray = dataclass_field(repr=False)

    def __post_init__(self):
        size = self.field.q ** self.n
        check_budget("dense state", size, DENSE_STATE_BUDGET)
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.size != size:
            raise DimensionMismatch(f"{amplitudes.size} amplitudes for (GF({self.field.descriptor}))^{self.n}")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > DENSE_NORM_TOLERANCE:
            raise NormalizationError(f"dense state has squared norm {norm}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_unnormalized(cls, field: FiniteField, n: int, amplitudes: np.ndarray) -> "DenseState":
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise NormalizationError("zero vector cannot be normalized")
        return cls(field, n, amplitudes / norm)

    @property
    def dimension(self) -> int:
        return self.field.q ** self.n

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((self.field.q,) * self.n)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def amplitude(self, x: Sequence[int]) -> complex:
        return complex(self.amplitudes[indices_from_vectors(self.field.q, np.asarray(x, dtype=np.int64))])

    def allclose(self, other: "DenseState", atol: float = 1e-10) -> bool:
        return (self.field == other.field and self.n == other.n
                and np.allclose(self.amplitudes, other.amplitudes, atol=atol, rtol=0))


State = Union[QuditState, DenseState]


def _axis(n: int, coordinate: int) -> int:
    return n - 1 - coordinate


def _along(q: int, n: int, coordinate: int, values: np.ndarray) -> np.ndarray:
    shape = [1] * n
    shape[_axis(n, coordinate)] = q
    return values.reshape(shape)


def basis_state(field: FiniteField, x: Sequence[int]) -> DenseState:
    x = np.asarray(x, dtype=np.int64).reshape(-1)
    field.validate(x)
    amplitudes = np.zeros(field.q ** x.size, dtype=np.complex128)
    amplitudes[indices_from_vectors(field.q, x)] = 1.0
    return DenseState(field, int(x.size), amplitudes)


def product_state(qudits: Sequence[QuditState]) -> DenseState:
    """Tensor product with qudits[j] on coordinate j."""
    if not qudits:
        raise DimensionMismatch("product of no qudits")
    field = qudits[0].field
    if any(qudit.field != field for qudit in qudits):
        raise DimensionMismatch("qudits over different fields")
    check_budget("dense state", field.q ** len(qudits), DENSE_STATE_BUDGET)
    amplitudes = reduce(lambda acc, qudit: np.kron(qudit.amplitudes, acc), qudits[1:], qudits[0].amplitudes)
    return DenseState(field, len(qudits), amplitudes)


def random_state(field: FiniteField, n: int, rng: np.random.Generator) -> DenseState:
    size = field.q ** n
    check_budget("dense state", size, DENSE_STATE_BUDGET)
    return DenseState.from_unnormalized(field, n, rng.normal(size=size) + 1j * rng.normal(size=size))


def noisy_codeword_state(field: FiniteField, profile, c: Sequence[int]) -> DenseState:
    """|psi_c> = sum_e f(e) |c + e>, a product of noisy symbols."""
    return product_state([noisy_symbol_state(field, profile, int(b)) for b in np.asarray(c).reshape(-1)])


def _transform(state: DenseState, matrix: np.ndarray) -> DenseState:
    tensor = state.tensor()
    for axis in range(state.n):
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [axis])), 0, axis)
    return DenseState(state.field, state.n, tensor.reshape(-1) / np.sqrt(state.field.q) ** state.n)


def qft_dense(state: DenseState) -> DenseState:
    """a_hat(y) = q^{-n/2} sum_x chi_y(x) a(x), applied one coordinate at a time."""
    return _transform(state, state.field.character_matrix())


def qft_dense_inverse(state: DenseState) -> DenseState:
    return _transform(state, state.field.character_matrix().conj())


def _check_vector(state: DenseState, b: Sequence[int]) -> np.ndarray:
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.size != state.n:
        raise DimensionMismatch(f"vector of length {b.size} applied to an n={state.n} state")
    state.field.validate(b)
    return b


def shift(state: State, b) -> State:
    """X_b |x> = |x + b>."""
    if isinstance(state, QuditState):
        return shift_qudit(state, int(np.asarray(b).reshape(-1)[0]))
    field, n = state.field, state.n
    b = _check_vector(state, b)
    tensor = state.tensor()
    for j in range(n):
        tensor = np.take(tensor, field.sub(field.elements, int(b[j])), axis=_axis(n, j))
    return DenseState(field, n, tensor.reshape(-1))


def phase(state: State, b) -> State:
    """Z_b |x> = chi_x(b) |x>."""
    if isinstance(state, QuditState):
        return phase_qudit(state, int(np.asarray(b).reshape(-1)[0]))
    field, n = state.field, state.n
    b = _check_vector(state, b)
    tensor = state.tensor()
    for j in range(n):
        tensor = tensor * _along(field.q, n, j, symbol_characters(field, int(b[j])))
    return DenseState(field, n, tensor.reshape(-1))


def dense_code_superposition(code: LinearCode, profile) -> DenseState:
    """Z^{-1/2} sum_{c in C} sum_e f(e) |c + e>, Z taken from the direct norm."""
    field, n, q = code.field, code.n, code.q
    check_budget("dense state", q ** n, DENSE_STATE_BUDGET)
    check_budget("dense superposition terms", code.size() * q ** n, DENSE_STATE_BUDGET * 64)
    f_by_weight = np.asarray(profile.f_amplitude(np.arange(n + 1), n), dtype=np.float64)
    elements = field.elements
    total = np.zeros((q,) * n, dtype=np.float64)
    for chunk in code.iter_codewords():
        for c in chunk:
            weight = np.zeros((q,) * n, dtype=np.int64)
            for j in range(n):
                weight = weight + _along(q, n, j, (elements != c[j]).astype(np.int64))
            total += f_by_weight[weight]
    return DenseState.from_unnormalized(field, n, total.reshape(-1))


def inner_product(a: State, b: State) -> complex:
    """<a|b>, conjugate-linear in a."""
    if type(a) is not type(b) or a.field != b.field or a.amplitudes.shape != b.amplitudes.shape:
        raise DimensionMismatch("inner product of states from different spaces")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def dump_json(state: State, path: Optional[Union[str, Path]] = None) -> str:
    """{"field", "n", "amplitudes": [{"index", "re", "im"}, ...]} with nonzero entries only."""
    n = state.n if isinstance(state, DenseState) else 1
    entries = [
        {"index": int(i), "re": float(state.amplitudes[i].real), "im": float(state.amplitudes[i].imag)}
        for i in np.flatnonzero(state.amplitudes)
    ]
    text = json.dumps({"field": state.field.descriptor, "n": n, "amplitudes": entries})
    if path is not None:
        Path(path).write_text(text)
    return text
