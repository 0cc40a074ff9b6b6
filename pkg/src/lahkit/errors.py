"""Exception types raised by lahkit."""


class ParameterError(ValueError):
    """An argument is outside the domain of the requested operation."""


class ConsistencyError(ArithmeticError):
    """An internal identity failed, e.g. a monomial division left a remainder."""


class OracleLimitError(ParameterError):
    """Brute-force enumeration was asked for more elements than allowed."""
