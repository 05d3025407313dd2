"""
Utilities package initialization
"""
from .logging import setup_logging, get_logger, logger
from .errors import GepuError, ConfigError, DataError, NumericalError, GepuWarning

__all__ = [
    "setup_logging",
    "get_logger",
    "logger",
    "GepuError",
    "ConfigError",
    "DataError",
    "NumericalError",
    "GepuWarning",
]
