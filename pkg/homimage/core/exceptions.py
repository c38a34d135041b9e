"""
Error hierarchy for homimage

Every error carries a stable error_code so the CLI can report it the same way
an API would report an ErrorResponse.
"""
from typing import Optional, Tuple

from homimage.models.models import ErrorResponse


class HomImageError(Exception):
    error_code = "HOMIMAGE_ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_response(self) -> ErrorResponse:
        return ErrorResponse(message=self.message, error_code=self.error_code)


class KindViolation(HomImageError):
    """A structure does not satisfy the requested kind."""
    error_code = "KIND_VIOLATION"

    def __init__(self, reason: str, witness: Optional[Tuple[int, int]] = None):
        detail = reason if witness is None else f"{reason} at pair {witness}"
        super().__init__(detail)
        self.reason = reason
        self.witness = witness


class OutOfRange(HomImageError):
    error_code = "OUT_OF_RANGE"


class SizeMismatch(HomImageError):
    error_code = "SIZE_MISMATCH"


class RangeError(HomImageError):
    """Family parameters outside their domain."""
    error_code = "RANGE_ERROR"


class BoundExceeded(HomImageError):
    """An exhaustive operation was asked to go past its configured bound."""
    error_code = "BOUND_EXCEEDED"


class ParseError(HomImageError):
    error_code = "PARSE_ERROR"

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class InvalidDecomposition(HomImageError):
    error_code = "INVALID_DECOMPOSITION"


class TableMismatch(HomImageError):
    error_code = "TABLE_MISMATCH"


class PreconditionViolated(HomImageError):
    error_code = "PRECONDITION_VIOLATED"


class NotAnAntichainVerdict(HomImageError):
    error_code = "NOT_AN_ANTICHAIN_VERDICT"


class VerificationFailed(HomImageError):
    """Raised when a guaranteed certificate fails to verify; always an implementation bug."""
    error_code = "VERIFICATION_FAILED"


class UnknownTag(HomImageError):
    error_code = "UNKNOWN_TAG"
