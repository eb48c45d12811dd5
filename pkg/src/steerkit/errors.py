"""Exception types shared across the toolkit."""


class SteerkitError(ValueError):
    """Base class for all toolkit errors."""


class DimensionMismatch(SteerkitError):
    """Operands have incompatible shapes."""


class NotHermitian(SteerkitError):
    """Matrix is not Hermitian within tolerance."""


class NotNormalized(SteerkitError):
    """Trace differs from 1 beyond tolerance."""


class NotPositive(SteerkitError):
    """Matrix has an eigenvalue below the allowed clamp window."""


class SingularMatrix(SteerkitError):
    """PSD matrix is rank deficient where full rank is required."""


class SingularMarginal(SteerkitError):
    """Bob's reduced state is (near) pure; the steering ellipsoid is degenerate."""
