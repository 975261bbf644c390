from utils.budget import BudgetExceeded


class ReductionError(Exception):
    """Base exception for the short-codeword reduction pipeline."""
    pass


class InfeasibleReduction(ReductionError, ValueError):
    """The USD path needs p_usd > R; these parameters do not satisfy it."""
    pass


class JRejected(ReductionError):
    """The revealed set J fell outside the acceptance window."""

    def __init__(self, message: str, size: int):
        super().__init__(message)
        self.size = size


class DegenerateDual(ReductionError):
    """The code whose words are sampled is {0}."""
    pass


class CodewordVerificationError(ReductionError):
    """An emitted word failed the parity checks of the target code."""
    pass


__all__ = [
    'BudgetExceeded',
    'ReductionError',
    'InfeasibleReduction',
    'JRejected',
    'DegenerateDual',
    'CodewordVerificationError',
]
