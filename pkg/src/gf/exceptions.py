class FieldError(Exception):
    """Base exception for finite-field errors."""
    pass


class InvalidFieldError(FieldError):
    """Field parameters do not describe GF(p^s) (non-prime p, s < 1, bad descriptor)."""
    pass


class FieldOrderTooLarge(InvalidFieldError):
    """p^s is over the table-construction limit."""
    pass


class ZeroInversionError(FieldError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""
    pass


class ElementError(FieldError, ValueError):
    """An element index outside 0..q-1."""
    pass
