"""Exception types. Each carries a short machine-readable ``code`` used by the CLI."""


class CliffordError(Exception):
    code = "ERROR"


class DimensionMismatch(CliffordError, ValueError):
    code = "DIMENSION_MISMATCH"


class NotInvertible(CliffordError, ArithmeticError):
    code = "NOT_INVERTIBLE"


class NotOrthogonal(CliffordError, ValueError):
    code = "NOT_ORTHOGONAL"


class InfiniteCodimension(CliffordError, ValueError):
    code = "INFINITE_CODIMENSION"


class WindowTooSmall(CliffordError, ValueError):
    code = "WINDOW_TOO_SMALL"


class NonSquareForm(CliffordError, ValueError):
    code = "NON_SQUARE_FORM"


class InvalidComplement(CliffordError, ValueError):
    code = "INVALID_COMPLEMENT"


class DependentVectors(CliffordError, ValueError):
    code = "DEPENDENT_VECTORS"


class GeneratorCapExceeded(CliffordError, ValueError):
    code = "GENERATOR_CAP"


class InvalidArgument(CliffordError, ValueError):
    code = "INVALID_ARGUMENT"


class InvariantViolation(CliffordError, AssertionError):
    """An internal cross-check failed (e.g. the two innerness routes disagree)."""

    code = "INVARIANT_VIOLATION"
