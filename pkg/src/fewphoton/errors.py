"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A numeric contract was violated (non-unitary matrix, unnormalized state, ...)."""


class SchemaError(ValueError):
    """A JSON document does not match the expected schema; names the offending field."""


class ConvergenceError(RuntimeError):
    """A numeric search failed to reach its target residual; carries diagnostics."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
