"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergenceError(ValueError):
    """The requested quantity diverges at the given argument."""


class RangeError(ValueError):
    """A result would leave the representable range of the operation."""


class ConfigurationError(ValueError):
    """A quadrature or run configuration is invalid for the operation."""
