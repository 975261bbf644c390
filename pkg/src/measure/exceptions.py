from noise import DomainError


class MeasurementError(Exception):
    """Base exception for measurement errors."""
    pass


class ParameterOrderError(MeasurementError, ValueError):
    """Partial USD needs 0 <= omega' <= omega."""
    pass


class OracleFailure(MeasurementError):
    """The dense PGM oracle could not build a usable rho^{-1/2}."""
    pass


__all__ = ['DomainError', 'MeasurementError', 'ParameterOrderError', 'OracleFailure']
