"""
Error and warning hierarchy for the GEPU toolkit

Every failure raised by the library is a GepuError. The CLI turns one into a
single structured report and an exit code (2 config, 3 data, 4 numerical).
"""
from typing import Any, Dict, Optional


class GepuError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1
    module = "gepu"

    def __init__(
        self,
        message: str,
        *,
        operation: Optional[str] = None,
        location: Optional[str] = None,
        module: Optional[str] = None,
    ):
        super().__init__(message)
        self.message = message
        self.operation = operation
        self.location = location
        if module is not None:
            self.module = module

    def add_context(self, context: str) -> "GepuError":
        """Prefix location context while the error propagates"""
        self.location = f"{context}: {self.location}" if self.location else context
        return self

    def to_report(self) -> Dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "module": self.module,
            "operation": self.operation,
            "location": self.location,
            "message": self.message,
            "exit_code": self.exit_code,
        }

    def __str__(self) -> str:
        if self.location:
            return f"{self.message} (at {self.location})"
        return self.message


class ConfigError(GepuError):
    exit_code = 2
    module = "cli_report"


class DataError(GepuError):
    exit_code = 3


class NumericalError(GepuError):
    exit_code = 4


# ingest
class ParseError(DataError):
    module = "ingest"


class GapError(DataError):
    module = "ingest"


class MissingValueError(DataError):
    module = "ingest"


class SchemaError(DataError):
    module = "ingest"


class NonPositivePriceError(DataError):
    module = "ingest"


class UnorderedDatesError(DataError):
    module = "ingest"


class EmptyYearError(DataError):
    module = "ingest"


class RangeError(DataError):
    module = "ingest"


# pca_index
class InsufficientHistoryError(DataError):
    module = "pca_index"


class MissingWeightYearError(DataError):
    module = "pca_index"


class ZeroVarianceError(NumericalError):
    module = "pca_index"


class ConvergenceError(NumericalError):
    module = "pca_index"


class DegenerateWeightsError(NumericalError):
    module = "pca_index"


# market_metrics
class InsufficientObservationsError(DataError):
    module = "market_metrics"


class NoValidPairsError(DataError):
    module = "market_metrics"


# econometrics
class InsufficientOverlapError(DataError):
    module = "econometrics"


class RankDeficiencyError(NumericalError):
    module = "econometrics"


class ZeroVarianceDependentError(NumericalError):
    module = "econometrics"


class GepuWarning(UserWarning):
    """Base class for results that are returned but flagged"""


class DegenerateSpectrumWarning(GepuWarning):
    pass


class IllConditionedWarning(GepuWarning):
    pass
