class StateError(Exception):
    """Base exception for state numerics errors."""
    pass


class DimensionMismatch(StateError, ValueError):
    """Two states (or a state and an operator argument) live in different spaces."""
    pass


class NormalizationError(StateError):
    """Amplitudes are not a unit vector within tolerance."""
    pass
