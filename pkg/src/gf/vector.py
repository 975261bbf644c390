from dataclasses import dataclass, field as dataclass_field
from typing import Iterable, Sequence, Union

import numpy as np

from .exceptions import ElementError
from .field import FiniteField


def hamming_weight(x: Union[np.ndarray, Sequence[int]]) -> Union[int, np.ndarray]:
    """Number of nonzero coordinates along the last axis."""
    weights = np.count_nonzero(np.asarray(x), axis=-1)
    return weights if np.ndim(weights) else int(weights)


@dataclass(frozen=True, eq=False)
class FieldVector:
    """A vector of F_q^n, coordinates stored as element indices."""
    field: FiniteField
    coords: np.ndarray = dataclass_field(repr=False)

    def __post_init__(self):
        coords = np.array(self.coords, dtype=np.int64).reshape(-1)
        if coords.size and (coords.min() < 0 or coords.max() >= self.field.q):
            raise ElementError(f"coordinate outside GF({self.field.descriptor})")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zeros(cls, field: FiniteField, n: int) -> "FieldVector":
        return cls(field, np.zeros(n, dtype=np.int64))

    @classmethod
    def random(cls, field: FiniteField, n: int, rng: np.random.Generator) -> "FieldVector":
        return cls(field, field.random_elements(rng, n))

    @property
    def n(self) -> int:
        return int(self.coords.size)

    @property
    def weight(self) -> int:
        return hamming_weight(self.coords)

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.coords.tolist())

    def __getitem__(self, index):
        return self.coords[index]

    def __add__(self, other: "FieldVector") -> "FieldVector":
        return FieldVector(self.field, self.field.add(self.coords, other.coords))

    def __sub__(self, other: "FieldVector") -> "FieldVector":
        return FieldVector(self.field, self.field.sub(self.coords, other.coords))

    def __neg__(self) -> "FieldVector":
        return FieldVector(self.field, self.field.neg(self.coords))

    def scale(self, a: int) -> "FieldVector":
        return FieldVector(self.field, self.field.mul(a, self.coords))

    def dot(self, other: "FieldVector") -> int:
        return self.field.dot(self.coords, other.coords)

    def restrict(self, positions: Iterable[int]) -> "FieldVector":
        return FieldVector(self.field, self.coords[np.asarray(list(positions), dtype=np.int64)])

    def character(self, other: "FieldVector") -> complex:
        """chi_self(other), the product of coordinate characters."""
        return self.field.character(self.coords, other.coords)

    def tolist(self):
        return self.coords.tolist()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldVector)
            and self.field == other.field
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords.tobytes()))


def vectors_from_indices(q: int, n: int, indices: Union[int, np.ndarray]) -> np.ndarray:
    """Little-endian digit vectors of F_q^n for integer indices (coordinate 0 varies fastest)."""
    idx = np.asarray(indices, dtype=np.int64)
    powers = q ** np.arange(n, dtype=np.int64)
    return (idx[..., None] // powers) % q


def indices_from_vectors(q: int, vectors: Union[np.ndarray, Sequence[int]]) -> Union[int, np.ndarray]:
    """Inverse of vectors_from_indices along the last axis."""
    vecs = np.asarray(vectors, dtype=np.int64)
    powers = q ** np.arange(vecs.shape[-1], dtype=np.int64)
    result = vecs @ powers
    return result if np.ndim(result) else int(result)
