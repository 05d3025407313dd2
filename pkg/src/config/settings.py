"""
Configuration settings for the GEPU toolkit
"""
import os
from typing import List
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Settings:
    """Application settings and numerical constants"""

    # Logging is the only environment-driven setting
    LOG_LEVEL = os.getenv("GEPU_LOG_LEVEL", "INFO")

    # Index construction
    DEFAULT_WINDOW_SIZES: List[int] = [24, 30, 36, 42, 48]
    EIGEN_TOL = 1e-12
    EIGEN_MAX_ITER = 10000
    EIGEN_RESIDUAL_TOL = 1e-10
    DEGENERATE_GAP = 1e-8
    DEGENERATE_WEIGHT_SUM = 1e-10

    # Market metrics
    DEFAULT_WORLD_INDEX_ID = "MSCI_ACWI"
    DEFAULT_MIN_OVERLAP = 10
    MIN_VOLATILITY_OBS = 5
    MAX_BRIDGE_GAP = 2

    # Regression
    CONDITION_LIMIT = 1e10
    MIN_ALIGNED_MONTHS = 4

    # Output precision (significant digits)
    TABLE_DIGITS = 6
    SERIES_DIGITS = 17

    @classmethod
    def table_float_format(cls) -> str:
        return f"%.{cls.TABLE_DIGITS}g"

    @classmethod
    def series_float_format(cls) -> str:
        return f"%.{cls.SERIES_DIGITS}g"


# Global settings instance
settings = Settings()
