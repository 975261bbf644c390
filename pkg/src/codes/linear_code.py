import json
from functools import cached_property
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Union

import numpy as np

from gf import FiniteField, hamming_weight, parse_field, vectors_from_indices
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import ENUMERATION_CHUNK_SIZE
from .exceptions import InconsistentRestriction, RankDeficient
from .linalg import echelon_pivots, inverse, null_space, row_reduce, solve

logger = get_logger(__name__)

Positions = Union[Sequence[int], np.ndarray]


def _positions(positions: Positions, n: int) -> np.ndarray:
    idx = np.asarray(positions, dtype=np.int64).reshape(-1)
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise IndexError(f"coordinate subset outside 0..{n - 1}")
    return idx


class LinearCode:
    """C = {u G : u in F_q^k} for a k x n generator matrix G.

    G may be rank deficient; it is kept as given. The parity-check matrix
    H (rows spanning the dual code, G H^T = 0) is computed on first use.
    """

    def __init__(self, field: FiniteField, generator: Union[np.ndarray, Sequence[Sequence[int]]], n: Optional[int] = None):
        g = np.array(generator, dtype=np.int64)
        if g.size == 0:
            if n is None:
                n = g.shape[1] if g.ndim == 2 else 0
            g = np.zeros((0, n), dtype=np.int64)
        if g.ndim != 2:
            raise ValueError("generator matrix must be 2-D")
        field.validate(g)
        g.setflags(write=False)
        self.field = field
        self.generator = g

    # ------------------------------------------------------------------
    # shape
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rate(self) -> float:
        return self.k / self.n if self.n else 0.0

    def __repr__(self) -> str:
        return f"LinearCode(GF({self.field.descriptor}), n={self.n}, k={self.k}, rank={self.rank})"

    # ------------------------------------------------------------------
    # cached linear algebra
    # ------------------------------------------------------------------
    @cached_property
    def _reduced(self):
        reduced, pivots = row_reduce(self.field, self.generator)
        return reduced[:len(pivots)], pivots

    @property
    def rank(self) -> int:
        return len(self._reduced[1])

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.k

    @property
    def pivots(self) -> List[int]:
        """Lowest-index information set of the code (pivot columns of G)."""
        return list(self._reduced[1])

    def basis(self) -> np.ndarray:
        """rank x n reduced basis of C."""
        return self._reduced[0]

    @cached_property
    def parity_check(self) -> np.ndarray:
        h = null_space(self.field, self.generator)
        h.setflags(write=False)
        return h

    @property
    def dimension_of_dual(self) -> int:
        return self.n - self.rank

    # ------------------------------------------------------------------
    # derived codes
    # ------------------------------------------------------------------
    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.parity_check, n=self.n)

    def puncture(self, positions: Positions) -> "LinearCode":
        """C_J = {c_J : c in C}."""
        idx = _positions(positions, self.n)
        return LinearCode(self.field, self.generator[:, idx], n=idx.size)

    def shorten(self, positions: Positions) -> "LinearCode":
        """C^J = {c_J : c in C, c_i = 0 outside J}."""
        idx = _positions(positions, self.n)
        outside = np.setdiff1d(np.arange(self.n), idx)
        if outside.size == 0:
            return LinearCode(self.field, self.generator[:, idx], n=idx.size)
        messages = null_space(self.field, self.generator[:, outside].T)
        if messages.shape[0] == 0:
            return LinearCode(self.field, np.zeros((0, idx.size), dtype=np.int64), n=idx.size)
        return LinearCode(self.field, self.field.matmul(messages, self.generator[:, idx]), n=idx.size)

    # ------------------------------------------------------------------
    # codewords
    # ------------------------------------------------------------------
    def encode(self, message: np.ndarray) -> np.ndarray:
        """u G for one message (k,) or a batch (N, k)."""
        return self.field.matmul(np.asarray(message, dtype=np.int64), self.generator)

    def syndrome(self, x: np.ndarray) -> np.ndarray:
        """G x^T; the shifted dual code C_s^perp is {x : syndrome(x) = s}."""
        return self.field.matmul(np.asarray(x, dtype=np.int64), self.generator.T)

    def contains(self, x: np.ndarray) -> bool:
        if self.dimension_of_dual == 0:
            return True
        return not np.any(self.field.matmul(np.asarray(x, dtype=np.int64), self.parity_check.T))

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode(self.field.random_elements(rng, self.k))

    def size(self) -> int:
        return self.q ** self.rank

    def iter_codewords(self, chunk_size: int = ENUMERATION_CHUNK_SIZE, budget: Optional[int] = None) -> Iterator[np.ndarray]:
        """All distinct codewords in chunks, ordered by little-endian index over the reduced basis."""
        total = self.size()
        check_budget("codeword enumeration", total, budget)
        basis = self.basis()
        for start in range(0, total, chunk_size):
            stop = min(total, start + chunk_size)
            coefficients = vectors_from_indices(self.q, basis.shape[0], np.arange(start, stop))
            if basis.shape[0] == 0:
                yield np.zeros((stop - start, self.n), dtype=np.int64)
            else:
                yield self.field.matmul(coefficients, basis)

    def codewords(self, budget: Optional[int] = None) -> np.ndarray:
        chunks = list(self.iter_codewords(budget=budget))
        return np.concatenate(chunks, axis=0)

    def codeword_set(self, budget: Optional[int] = None) -> set:
        return {tuple(row) for row in self.codewords(budget=budget).tolist()}

    def same_code(self, other: "LinearCode") -> bool:
        """Set equality of the two codes (equal rank and mutual containment)."""
        if self.field != other.field or self.n != other.n or self.rank != other.rank:
            return False
        return all(other.contains(row) for row in self.basis())

    def weight_enumerator(self, budget: Optional[int] = None) -> np.ndarray:
        """A(t) = #{c in C : |c| = t} for t = 0..n."""
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for chunk in self.iter_codewords(budget=budget):
            counts += np.bincount(hamming_weight(chunk), minlength=self.n + 1)
        return counts

    # ------------------------------------------------------------------
    # coordinate recovery
    # ------------------------------------------------------------------
    def pseudo_inverse(self, positions: Positions) -> np.ndarray:
        """M (|J| x k) with (u G_J) M = u for every u; needs rank(G_J) = k."""
        idx = _positions(positions, self.n)
        restricted = self.generator[:, idx]
        pivots = echelon_pivots(self.field, restricted)
        if len(pivots) < self.k:
            raise RankDeficient(
                f"G_J has rank {len(pivots)} < k={self.k} on {idx.size} coordinates",
                len(pivots), self.k,
            )
        right_inverse = np.zeros((idx.size, self.k), dtype=np.int64)
        if self.k:
            right_inverse[pivots, :] = inverse(self.field, restricted[:, pivots])
        return right_inverse

    def recover_from_coordinates(self, positions: Positions, values: np.ndarray) -> np.ndarray:
        """The unique codeword c with c_J = values; solves u G_J = c_J then returns u G."""
        idx = _positions(positions, self.n)
        values = np.asarray(values, dtype=np.int64).reshape(-1)
        if values.size != idx.size:
            raise ValueError("restriction length does not match the coordinate subset")
        if self.k == 0:
            return np.zeros(self.n, dtype=np.int64)
        solution = solve(self.field, self.generator[:, idx].T, values)
        if solution is None:
            # rank tells the two failure modes apart
            restricted_rank = len(echelon_pivots(self.field, self.generator[:, idx]))
            if restricted_rank < self.k:
                raise RankDeficient(f"G_J has rank {restricted_rank} < k={self.k}", restricted_rank, self.k)
            raise InconsistentRestriction("values are not the restriction of a codeword")
        message, pivots = solution
        if len(pivots) < self.k:
            raise RankDeficient(f"G_J has rank {len(pivots)} < k={self.k}", len(pivots), self.k)
        return self.encode(message)

    def coset_representative(self, syndrome: np.ndarray) -> Optional[np.ndarray]:
        """Some x with G x^T = s, or None when s is outside the column space of G."""
        s = np.asarray(syndrome, dtype=np.int64).reshape(-1)
        if s.size != self.k:
            raise ValueError(f"syndrome must have length k={self.k}")
        if self.k == 0:
            return np.zeros(self.n, dtype=np.int64)
        solution = solve(self.field, self.generator, s)
        return None if solution is None else solution[0]

    # ------------------------------------------------------------------
    # construction and serialization
    # ------------------------------------------------------------------
    @classmethod
    def random(cls, field: FiniteField, n: int, k: int, rng: np.random.Generator) -> "LinearCode":
        return random_code(field, n, k, rng)

    def to_dict(self) -> dict:
        return {"field": self.field.descriptor, "n": self.n, "k": self.k, "generator": self.generator.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "LinearCode":
        field = parse_field(data["field"])
        return cls(field, data["generator"], n=data.get("n"))

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(json.dumps(self.to_dict()))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "LinearCode":
        return cls.from_dict(json.loads(Path(path).read_text()))


def random_code(field: FiniteField, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """Code with an i.i.d. uniform k x n generator; rank deficiency is kept."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    code = LinearCode(field, field.random_elements(rng, (k, n)), n=n)
    log_event(
        logger, "debug", "Sampled random code", event_type="code_sampled",
        field=field.descriptor, extra={"n": n, "k": k},
    )
    return code


def repetition_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, np.ones((1, n), dtype=np.int64))


def full_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, np.eye(n, dtype=np.int64))


def zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, np.zeros((0, n), dtype=np.int64), n=n)
