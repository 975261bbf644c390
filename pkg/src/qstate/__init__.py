from .qudit import (
    QuditState,
    noisy_symbol_state,
    phase_qudit,
    qft_qudit,
    qft_qudit_inverse,
    shift_qudit,
    symbol_characters,
)
from .dense import (
    DenseState,
    basis_state,
    dense_code_superposition,
    dump_json,
    inner_product,
    noisy_codeword_state,
    phase,
    product_state,
    qft_dense,
    qft_dense_inverse,
    random_state,
    shift,
)
from .exceptions import DimensionMismatch, NormalizationError, StateError

__all__ = [
    'QuditState',
    'DenseState',

    'noisy_symbol_state',
    'noisy_codeword_state',
    'qft_qudit',
    'qft_qudit_inverse',
    'qft_dense',
    'qft_dense_inverse',
    'shift',
    'phase',
    'shift_qudit',
    'phase_qudit',
    'symbol_characters',
    'basis_state',
    'product_state',
    'random_state',
    'dense_code_superposition',
    'inner_product',
    'dump_json',

    'StateError',
    'DimensionMismatch',
    'NormalizationError',
]
