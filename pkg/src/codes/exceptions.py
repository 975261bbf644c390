from utils.budget import BudgetExceeded


class CodeError(Exception):
    """Base exception for linear-code errors."""
    pass


class RankDeficient(CodeError):
    """A generator restriction G_J has rank below k."""

    def __init__(self, message: str, rank: int = -1, required: int = -1):
        super().__init__(message)
        self.rank = rank
        self.required = required


class InconsistentRestriction(CodeError):
    """The given coordinates are not the restriction of any codeword."""
    pass


class SingularSystem(CodeError):
    """A Prange round hit a rank-deficient parity-check restriction."""
    pass


class DegenerateTarget(CodeError):
    """A short-codeword search whose only possible answer is the zero word."""
    pass


class NoHit(CodeError):
    """The Prange search used its whole round budget without an exact-weight hit."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


__all__ = [
    'BudgetExceeded',
    'CodeError',
    'RankDeficient',
    'InconsistentRestriction',
    'SingularSystem',
    'DegenerateTarget',
    'NoHit',
]
