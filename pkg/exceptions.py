"""
Custom exceptions for the Pfaff-Darboux convexity toolkit.
Provides standardized error handling across the toolkit.
"""


class PfaffToolkitError(Exception):
    """Base exception for all toolkit errors."""
    kind = "error"


class ExprError(PfaffToolkitError):
    """Base exception for expression-related errors."""
    kind = "invalid_expression"


class ExprParseError(ExprError):
    """Raised when expression text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        self.position = position
        self.reason = message
        super().__init__(f"Parse error at position {position}: {message}")


class UnknownIdentifierError(ExprError):
    """Raised when an identifier is not one of the declared variables."""

    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"Unknown identifier '{name}' at position {position}")


class PoleError(ExprError):
    """Raised when a denominator vanishes at the evaluation point."""

    def __init__(self, point):
        self.point = tuple(point)
        super().__init__(f"Denominator vanishes at point {[str(v) for v in self.point]}")


class DimensionMismatchError(PfaffToolkitError):
    """Raised when objects of different dimensions are combined."""
    kind = "dimension_mismatch"

    def __init__(self, expected, actual, what: str = "dimension"):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(f"Mismatched {what}: expected {expected}, got {actual}")


class FormVanishesError(PfaffToolkitError):
    """Raised when a 1-form vanishes at the query point."""
    kind = "form_vanishes"

    def __init__(self, point):
        self.point = tuple(point)
        super().__init__(f"Form vanishes at point {[str(v) for v in self.point]}")


class InvalidInputError(PfaffToolkitError):
    """Raised when input data is invalid."""
    kind = "invalid_input"

    def __init__(self, message: str, input_type: str = "unknown"):
        self.input_type = input_type
        super().__init__(f"Invalid {input_type} input: {message}")


class ConnectionConflictError(PfaffToolkitError):
    """Raised when Christoffel symbols are given inconsistently for (i, j) and (j, i)."""
    kind = "connection_conflict"

    def __init__(self, k: int, i: int, j: int):
        self.k = k
        self.i = i
        self.j = j
        super().__init__(
            f"Conflicting Christoffel symbols: Gamma^{k}_{i}{j} != Gamma^{k}_{j}{i}"
        )


class ChartError(PfaffToolkitError):
    """Base exception for seed-chart and pipeline errors."""
    kind = "chart_error"
    step = "chart"


class ChartValidationError(ChartError):
    """Raised when a seed chart fails its invariants."""
    kind = "invalid_chart"

    def __init__(self, report, step: str = "validate"):
        self.report = report
        self.step = step
        failed = ", ".join(report.failed_flags()) if report is not None else "unknown"
        self.reason = f"failed checks: {failed}"
        super().__init__(f"Seed chart is invalid ({self.reason})")


class PreconditionError(ChartError):
    """Raised when a pipeline step precondition fails."""
    kind = "precondition_failed"

    def __init__(self, step: str, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"Precondition failed at step '{step}': {reason}")


class HypothesisViolatedError(ChartError):
    """Raised when S(omega) is not positive definite on the leaf tangent at x."""
    kind = "hypothesis_violated"

    def __init__(self, step: str, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"Convexity hypothesis violated at step '{step}': {reason}")


class VerificationError(ChartError):
    """Raised when a pipeline output fails verify_representation."""
    kind = "verification_failed"

    def __init__(self, report, step: str = "verify_representation"):
        self.report = report
        self.step = step
        self.reason = f"failed checks: {', '.join(report.failed_flags())}"
        super().__init__(f"Representation failed verification ({self.reason})")


class SearchExhaustedError(PfaffToolkitError):
    """Raised when a power-of-two constant search runs out of probes."""
    kind = "search_exhausted"

    def __init__(self, constant: str, probes: int, step: str = "search"):
        self.constant = constant
        self.probes = probes
        self.step = step
        self.reason = f"no admissible {constant} after {probes} probes"
        super().__init__(f"Search for '{constant}' exhausted after {probes} probes")


class ConfigurationError(PfaffToolkitError):
    """Raised when configuration is invalid or missing."""

    def __init__(self, config_key: str, reason: str):
        self.config_key = config_key
        self.reason = reason
        super().__init__(f"Configuration error for '{config_key}': {reason}")
