"""
Input panel types: monthly EPU levels, daily prices and GDP weights
"""
from typing import List, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, model_validator


def month_key(month: pd.Period) -> str:
    """Canonical YYYY-MM key for a monthly period"""
    return month.strftime("%Y-%m")


def as_month(value) -> pd.Period:
    """Coerce a YYYY-MM string (or Period/Timestamp) to a monthly Period"""
    if isinstance(value, pd.Period):
        return value.asfreq("M")
    return pd.Period(value, freq="M")


class EpuPanel(BaseModel):
    """Monthly EPU levels, one column per economy, indexed by calendar month"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: pd.DataFrame

    @model_validator(mode="after")
    def _check_panel(self) -> "EpuPanel":
        index = self.values.index
        if not isinstance(index, pd.PeriodIndex) or not index.freqstr.startswith("M"):
            raise ValueError("EpuPanel index must be a monthly PeriodIndex")
        if len(index) == 0:
            raise ValueError("EpuPanel must contain at least one month")
        if len(index) > 1:
            steps = np.diff(index.asi8)
            if not np.all(steps == 1):
                raise ValueError("EpuPanel months must be consecutive and increasing")
        data = self.values.to_numpy(dtype=float)
        if not np.all(np.isfinite(data)):
            raise ValueError("EpuPanel values must all be present and finite")
        if not np.all(data > 0):
            raise ValueError("EpuPanel values must be positive")
        return self

    @property
    def months(self) -> pd.PeriodIndex:
        return self.values.index

    @property
    def economies(self) -> List[str]:
        return [str(c) for c in self.values.columns]

    @property
    def first_month(self) -> pd.Period:
        return self.months[0]

    @property
    def last_month(self) -> pd.Period:
        return self.months[-1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape

    def equals(self, other: "EpuPanel") -> bool:
        return self.values.equals(other.values)


class DailyPricePanel(BaseModel):
    """Daily closing prices; NaN marks an absent cell (market holiday)"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    prices: pd.DataFrame

    @model_validator(mode="after")
    def _check_prices(self) -> "DailyPricePanel":
        index = self.prices.index
        if not isinstance(index, pd.DatetimeIndex):
            raise ValueError("DailyPricePanel index must be a DatetimeIndex")
        if not index.is_monotonic_increasing or not index.is_unique:
            raise ValueError("DailyPricePanel dates must be strictly increasing")
        present = self.prices.to_numpy(dtype=float)
        present = present[~np.isnan(present)]
        if not np.all(np.isfinite(present)) or not np.all(present > 0):
            raise ValueError("present prices must be finite and positive")
        return self

    @property
    def dates(self) -> pd.DatetimeIndex:
        return self.prices.index

    @property
    def series(self) -> List[str]:
        return [str(c) for c in self.prices.columns]

    def absent_count(self) -> int:
        return int(self.prices.isna().to_numpy().sum())

    def absent_cells(self) -> List[Tuple[str, str]]:
        stacked = self.prices.isna().stack()
        return [
            (date.strftime("%Y-%m-%d"), str(series))
            for (date, series), absent in stacked.items()
            if absent
        ]


class GdpWeightTable(BaseModel):
    """Annual GDP share weights; rows are years, columns economies, NaN = not listed"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    weights: pd.DataFrame

    @property
    def years(self) -> List[int]:
        return [int(y) for y in self.weights.index]

    def has_year(self, year: int) -> bool:
        return year in self.weights.index

    def weights_for(self, year: int, economies: List[str]) -> pd.Series:
        """Weights for ``year`` restricted to ``economies`` and renormalized to sum to one.

        Economies without a listed weight get 0. Returns an empty Series when
        the year is absent or none of the economies carries positive weight.
        """
        if year not in self.weights.index:
            return pd.Series(dtype=float)
        row = self.weights.loc[year].reindex(economies).fillna(0.0)
        total = float(row.sum())
        if total <= 0.0:
            return pd.Series(dtype=float)
        return row / total
