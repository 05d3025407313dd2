"""
Return panels and monthly market series
"""
from typing import Dict, List, Literal

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.ingest.models import month_key


class ReturnPanel(BaseModel):
    """Daily returns; a cell is present only when both prices it spans exist"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    returns: pd.DataFrame
    return_kind: Literal["simple", "log"] = "simple"
    holiday_mode: Literal["bridge", "strict"] = "bridge"

    @property
    def dates(self) -> pd.DatetimeIndex:
        return self.returns.index

    @property
    def series(self) -> List[str]:
        return [str(c) for c in self.returns.columns]

    @property
    def months(self) -> pd.PeriodIndex:
        return self.returns.index.to_period("M")

    def calendar_months(self) -> List[pd.Period]:
        return list(self.months.unique())

    def month_block(self, month: pd.Period) -> pd.DataFrame:
        return self.returns.loc[self.months == month]


class MonthlySeries(BaseModel):
    """Monthly volatility or average pairwise correlation with per-month support counts"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: Literal["volatility", "avg_correlation"]
    values: pd.Series
    support: pd.Series
    metadata: Dict[str, str] = Field(default_factory=dict)

    @property
    def months(self) -> pd.PeriodIndex:
        return self.values.index

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "month": [month_key(m) for m in self.months],
                "value": self.values.to_numpy(),
                "support": self.support.to_numpy(dtype=int),
            }
        )
