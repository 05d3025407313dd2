"""
Market metrics package initialization
"""
from .models import ReturnPanel, MonthlySeries
from .returns import daily_returns
from .monthly import (
    monthly_volatility,
    monthly_avg_pairwise_correlation,
    pairwise_correlation_stats,
    volatility_series,
    avg_correlation_series,
)

__all__ = [
    "ReturnPanel",
    "MonthlySeries",
    "daily_returns",
    "monthly_volatility",
    "monthly_avg_pairwise_correlation",
    "pairwise_correlation_stats",
    "volatility_series",
    "avg_correlation_series",
]
