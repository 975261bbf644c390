from .field import (
    FiniteField,
    field_new,
    field_of_order,
    find_irreducible,
    is_prime,
    parse_field,
)
from .vector import FieldVector, hamming_weight, indices_from_vectors, vectors_from_indices
from .exceptions import (
    ElementError,
    FieldError,
    FieldOrderTooLarge,
    InvalidFieldError,
    ZeroInversionError,
)


def character(field: FiniteField, y, x):
    """chi_y(x) = exp(2 pi i trace(x y) / p), multiplied over coordinates for vectors."""
    field.validate(y)
    field.validate(x)
    return field.character(y, x)


__all__ = [
    'FiniteField',
    'FieldVector',

    'field_new',
    'field_of_order',
    'find_irreducible',
    'is_prime',
    'parse_field',
    'character',
    'hamming_weight',
    'vectors_from_indices',
    'indices_from_vectors',

    'FieldError',
    'InvalidFieldError',
    'FieldOrderTooLarge',
    'ZeroInversionError',
    'ElementError',
]
