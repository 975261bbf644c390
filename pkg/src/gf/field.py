"""GF(p^s) arithmetic over exp/log tables.

Elements are the integers 0..q-1. An element a encodes the polynomial
sum_i a_i x^i whose coefficients a_i are the base-p digits of a, reduced
modulo a fixed monic irreducible polynomial of degree s. For s = 1 this is
plain arithmetic modulo p.

Every arithmetic method accepts Python ints or numpy integer arrays
(broadcasting like numpy) and returns the same kind.
"""

import math
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import MAX_CHARACTER_MATRIX_ORDER, MAX_FIELD_ORDER
from .exceptions import ElementError, FieldError, FieldOrderTooLarge, InvalidFieldError, ZeroInversionError

logger = get_logger(__name__)

ElementLike = Union[int, np.integer, np.ndarray, Sequence[int]]

# float64 matrix products are exact while every partial sum stays below 2^53
_EXACT_FLOAT_LIMIT = float(1 << 53)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _poly_mod(dividend: Sequence[int], divisor: Sequence[int], p: int) -> list:
    """Remainder of dividend modulo a monic divisor; coefficients low degree first."""
    rem = list(dividend)
    d = len(divisor) - 1
    for i in range(len(rem) - 1, d - 1, -1):
        coef = rem[i] % p
        if coef:
            for j in range(d + 1):
                rem[i - d + j] = (rem[i - d + j] - coef * divisor[j]) % p
    return [c % p for c in rem[:d]]


def _monic_polynomials(p: int, degree: int):
    for code in range(p ** degree):
        yield [(code // p ** i) % p for i in range(degree)] + [1]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    degree = len(poly) - 1
    if degree <= 1:
        return True
    if poly[0] % p == 0:
        return False
    for e in range(1, degree // 2 + 1):
        for divisor in _monic_polynomials(p, e):
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def find_irreducible(p: int, s: int) -> Tuple[int, ...]:
    """Lowest monic irreducible polynomial of degree s over F_p.

    Candidates x^s + c_{s-1}x^{s-1} + ... + c_0 are scanned in increasing
    order of the integer sum_i c_i p^i, i.e. lexicographically on
    (c_{s-1}, ..., c_0). Returns (c_0, ..., c_{s-1}).
    """
    for poly in _monic_polynomials(p, s):
        if _is_irreducible(poly, p):
            return tuple(poly[:-1])
    raise FieldError(f"no irreducible polynomial of degree {s} over F_{p}")


class FiniteField:
    """The finite field GF(p^s), immutable after construction."""

    def __init__(self, p: int, s: int = 1):
        p, s = int(p), int(s)
        if not is_prime(p):
            raise InvalidFieldError(f"characteristic {p} is not prime")
        if s < 1:
            raise InvalidFieldError(f"extension degree {s} must be at least 1")
        q = p ** s
        if q > MAX_FIELD_ORDER:
            raise FieldOrderTooLarge(f"GF({p}^{s}) has order {q} > {MAX_FIELD_ORDER}")

        self.p = p
        self.s = s
        self.q = q
        self.modulus: Tuple[int, ...] = find_irreducible(p, s) if s > 1 else (0,)

        self._powers = p ** np.arange(s, dtype=np.int64)
        elements = np.arange(q, dtype=np.int64)
        self._digits = (elements[:, None] // self._powers[None, :]) % p

        self.primitive_element, self._exp = self._build_exp_table()
        self._log = np.zeros(q, dtype=np.int64)
        self._log[self._exp] = np.arange(q - 1, dtype=np.int64)
        self._trace = self._build_trace_table()

        for table in (self._digits, self._exp, self._log, self._trace):
            table.setflags(write=False)

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    def _companion(self) -> np.ndarray:
        """Matrix of multiplication by x on coefficient vectors."""
        s, p = self.s, self.p
        companion = np.zeros((s, s), dtype=np.int64)
        for i in range(s - 1):
            companion[i + 1, i] = 1
        for j in range(s):
            companion[j, s - 1] = (-self.modulus[j]) % p
        return companion

    def _multiplication_matrix(self, g: int) -> np.ndarray:
        s, p = self.s, self.p
        companion = self._companion()
        result = np.zeros((s, s), dtype=np.int64)
        power = np.eye(s, dtype=np.int64)
        for coef in self._digits[g]:
            result = (result + int(coef) * power) % p
            power = (companion @ power) % p
        return result

    def _power_sequence(self, g: int) -> Optional[np.ndarray]:
        """[g^0, ..., g^(q-2)] when g generates the multiplicative group, else None."""
        matrix = self._multiplication_matrix(g)
        current = np.zeros(self.s, dtype=np.int64)
        current[0] = 1
        exp = np.empty(self.q - 1, dtype=np.int64)
        for i in range(self.q - 1):
            value = int(current @ self._powers)
            if i > 0 and value == 1:
                return None
            exp[i] = value
            current = (matrix @ current) % self.p
        return exp

    def _build_exp_table(self) -> Tuple[int, np.ndarray]:
        for g in range(1, self.q):
            exp = self._power_sequence(g)
            if exp is not None:
                return g, exp
        raise FieldError(f"no primitive element found in GF({self.q})")

    def _build_trace_table(self) -> np.ndarray:
        elements = np.arange(self.q, dtype=np.int64)
        if self.s == 1:
            return elements.copy()
        nonzero = elements != 0
        trace = np.zeros(self.q, dtype=np.int64)
        for j in range(self.s):
            frobenius = np.where(
                nonzero, self._exp[(self._log[elements] * self.p ** j) % (self.q - 1)], 0
            )
            trace = self.add(trace, frobenius)
        if np.any(trace >= self.p):
            raise FieldError(f"trace of GF({self.q}) left the prime subfield")
        return trace

    # ------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------
    @property
    def descriptor(self) -> str:
        return f"{self.p}^{self.s}"

    @classmethod
    def from_descriptor(cls, descriptor: str) -> "FiniteField":
        return parse_field(descriptor)

    def __repr__(self) -> str:
        return f"FiniteField({self.descriptor})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.s) == (other.p, other.s)

    def __hash__(self) -> int:
        return hash((self.p, self.s))

    def __reduce__(self):
        return (field_new, (self.p, self.s))

    # ------------------------------------------------------------------
    # element handling
    # ------------------------------------------------------------------
    def validate(self, a: ElementLike) -> None:
        arr = np.asarray(a)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ElementError(f"element outside 0..{self.q - 1} of GF({self.descriptor})")

    @staticmethod
    def _wrap(result: np.ndarray, *inputs) -> Union[int, np.ndarray]:
        if all(np.ndim(x) == 0 for x in inputs):
            return int(result)
        return result

    def digits(self, a: ElementLike) -> np.ndarray:
        """Polynomial coefficients of `a`, low degree first, along a new last axis."""
        return self._digits[np.asarray(a, dtype=np.int64)]

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def add(self, a: ElementLike, b: ElementLike):
        x = np.asarray(a, dtype=np.int64)
        y = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            result = x ^ y
        elif self.s == 1:
            result = (x + y) % self.p
        else:
            result = ((self._digits[x] + self._digits[y]) % self.p) @ self._powers
        return self._wrap(result, a, b)

    def neg(self, a: ElementLike):
        x = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            result = x.copy()
        elif self.s == 1:
            result = (-x) % self.p
        else:
            result = ((-self._digits[x]) % self.p) @ self._powers
        return self._wrap(result, a)

    def sub(self, a: ElementLike, b: ElementLike):
        return self.add(a, self.neg(b))

    def mul(self, a: ElementLike, b: ElementLike):
        x = np.asarray(a, dtype=np.int64)
        y = np.asarray(b, dtype=np.int64)
        if self.s == 1:
            result = (x * y) % self.p
        else:
            product = self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
            result = np.where((x == 0) | (y == 0), 0, product)
        return self._wrap(result, a, b)

    def inv(self, a: ElementLike):
        x = np.asarray(a, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroInversionError(f"zero has no inverse in GF({self.descriptor})")
        result = self._exp[(-self._log[x]) % (self.q - 1)]
        return self._wrap(result, a)

    def div(self, a: ElementLike, b: ElementLike):
        return self.mul(a, self.inv(b))

    def power(self, a: ElementLike, e: int):
        x = np.asarray(a, dtype=np.int64)
        if e == 0:
            result = np.ones_like(x)
        else:
            if e < 0 and np.any(x == 0):
                raise ZeroInversionError("negative power of zero")
            result = np.where(x == 0, 0, self._exp[(self._log[x] * e) % (self.q - 1)])
        return self._wrap(result, a)

    def sum(self, a: ElementLike, axis: int = -1):
        """Field sum of `a` along `axis`."""
        x = np.moveaxis(np.asarray(a, dtype=np.int64), axis, -1)
        if x.shape[-1] == 0:
            result = np.zeros(x.shape[:-1], dtype=np.int64)
        elif self.p == 2:
            result = np.bitwise_xor.reduce(x, axis=-1)
        elif self.s == 1:
            result = x.sum(axis=-1) % self.p
        else:
            result = (self._digits[x].sum(axis=-2) % self.p) @ self._powers
        return result if np.ndim(result) else int(result)

    def dot(self, x: ElementLike, y: ElementLike):
        """x . y = sum_i x_i y_i over the last axis."""
        return self.sum(self.mul(x, y), axis=-1)

    def scale(self, a: ElementLike, vector: ElementLike):
        return self.mul(a, vector)

    def matmul(self, a: ElementLike, b: ElementLike) -> np.ndarray:
        """Matrix product over the field (2-D or 1-D operands, numpy semantics)."""
        left = np.asarray(a, dtype=np.int64)
        right = np.asarray(b, dtype=np.int64)
        inner = left.shape[-1]
        if self.s == 1:
            if inner * float(self.p - 1) ** 2 < _EXACT_FLOAT_LIMIT:
                product = left.astype(np.float64) @ right.astype(np.float64)
                return np.rint(np.mod(product, self.p)).astype(np.int64) % self.p
            return (left @ right) % self.p
        squeeze_left = left.ndim == 1
        squeeze_right = right.ndim == 1
        l2 = left[None, :] if squeeze_left else left
        r2 = right[:, None] if squeeze_right else right
        acc = np.zeros((l2.shape[0], r2.shape[1]), dtype=np.int64)
        for i in range(inner):
            acc = self.add(acc, self.mul(l2[:, i:i + 1], r2[i:i + 1, :]))
        if squeeze_left:
            acc = acc[0]
        if squeeze_right:
            acc = acc[..., 0]
        return acc

    # ------------------------------------------------------------------
    # trace and characters
    # ------------------------------------------------------------------
    def trace(self, a: ElementLike):
        """Absolute trace to the prime subfield, as an integer in 0..p-1."""
        return self._wrap(self._trace[np.asarray(a, dtype=np.int64)], a)

    def character_exponent(self, y: ElementLike, x: ElementLike):
        """Integer e in Z_p with chi_y(x) = exp(2 pi i e / p); vectors combine over the last axis."""
        e = self._trace[np.asarray(self.mul(y, x), dtype=np.int64)]
        if np.ndim(y) >= 1 or np.ndim(x) >= 1:
            e = e.sum(axis=-1) % self.p
        return e if np.ndim(e) else int(e)

    def phase(self, exponent: ElementLike):
        """exp(2 pi i e / p) for integer exponents e."""
        e = np.asarray(exponent, dtype=np.int64) % self.p
        if self.p == 2:
            value = np.where(e == 0, 1.0, -1.0).astype(np.complex128)
        else:
            value = np.exp(2j * np.pi * e / self.p)
        return value if np.ndim(value) else complex(value)

    def character(self, y: ElementLike, x: ElementLike):
        return self.phase(self.character_exponent(y, x))

    def character_exponent_matrix(self) -> np.ndarray:
        """(q, q) table of trace(y * x)."""
        check_budget("character matrix order", self.q, MAX_CHARACTER_MATRIX_ORDER)
        elements = self.elements
        return self._trace[self.mul(elements[:, None], elements[None, :])]

    def character_matrix(self) -> np.ndarray:
        """(q, q) complex table of chi_y(x), rows indexed by y."""
        return self.phase(self.character_exponent_matrix())

    # ------------------------------------------------------------------
    # sampling
    # ------------------------------------------------------------------
    def random_elements(self, rng: np.random.Generator, size=None):
        return rng.integers(0, self.q, size=size, dtype=np.int64)

    def random_nonzero(self, rng: np.random.Generator, size=None):
        return rng.integers(1, self.q, size=size, dtype=np.int64)


@lru_cache(maxsize=None)
def field_new(p: int, s: int = 1) -> FiniteField:
    """Build (or reuse) GF(p^s)."""
    field = FiniteField(p, s)
    log_event(
        logger,
        "debug",
        f"Built GF({field.descriptor})",
        event_type="field_init",
        field=field.descriptor,
        extra={"modulus": list(field.modulus), "primitive_element": field.primitive_element},
    )
    return field


def parse_field(descriptor: str) -> FiniteField:
    """Field from a "p^s" descriptor; a bare prime "p" means s = 1."""
    text = str(descriptor).strip()
    try:
        if "^" in text:
            p_text, s_text = text.split("^", 1)
            p, s = int(p_text), int(s_text)
        else:
            p, s = int(text), 1
    except ValueError:
        raise InvalidFieldError(f"bad field descriptor {descriptor!r}, expected 'p^s'")
    return field_new(p, s)


def field_of_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    q = int(q)
    for p in range(2, q + 1):
        if q % p == 0:
            s, rest = 0, q
            while rest % p == 0:
                rest //= p
                s += 1
            if rest != 1:
                break
            return field_new(p, s)
    raise InvalidFieldError(f"{q} is not a prime power")
