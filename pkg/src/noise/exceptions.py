class NoiseError(Exception):
    """Base exception for noise-profile errors."""
    pass


class DomainError(NoiseError, ValueError):
    """A parameter outside the domain of the requested function."""
    pass
