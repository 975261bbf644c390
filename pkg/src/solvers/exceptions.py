from utils.budget import BudgetExceeded


class SolverError(Exception):
    """Base exception for QDP solver errors."""
    pass


class TooFewKept(SolverError):
    """Partial USD kept fewer coordinates than the reduction needs."""

    def __init__(self, message: str, kept: int, required: int):
        super().__init__(message)
        self.kept = kept
        self.required = required


class StateConsumed(SolverError):
    """A noisy codeword state was measured twice."""
    pass


class UnsupportedProfile(SolverError, ValueError):
    """The requested measurement does not apply to this noise profile."""
    pass


__all__ = ['BudgetExceeded', 'SolverError', 'TooFewKept', 'StateConsumed', 'UnsupportedProfile']
