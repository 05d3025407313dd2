"""
Ingest package initialization
"""
from .models import EpuPanel, DailyPricePanel, GdpWeightTable, as_month, month_key
from .loaders import (
    load_epu_panel,
    write_epu_panel,
    load_daily_prices,
    load_gdp_weights,
    restrict_months,
)

__all__ = [
    "EpuPanel",
    "DailyPricePanel",
    "GdpWeightTable",
    "as_month",
    "month_key",
    "load_epu_panel",
    "write_epu_panel",
    "load_daily_prices",
    "load_gdp_weights",
    "restrict_months",
]
