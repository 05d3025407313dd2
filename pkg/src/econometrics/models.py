"""
Regression samples, results and table rows
"""
from typing import Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.ingest.models import month_key

RegressionSpec = Literal["vol_simple", "vol_lagged", "corr_simple", "corr_lagged"]

CONST = "const"
GEPU = "gepu"
LAGGED_DEP = "lagged_dep"


class AlignedSample(BaseModel):
    """Dependent variable and regressors on their common months; no absent values"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    spec: RegressionSpec
    y: pd.Series
    regressors: pd.DataFrame

    @property
    def months(self) -> pd.PeriodIndex:
        return self.y.index

    @property
    def n_obs(self) -> int:
        return len(self.y)

    @property
    def with_lag(self) -> bool:
        return LAGGED_DEP in self.regressors.columns


class RegressionResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    spec: RegressionSpec
    coefficients: Dict[str, float]
    std_errors: Dict[str, float]
    t_stats: Dict[str, float]
    p_values: Dict[str, float]
    residuals: pd.Series
    n_obs: int
    r_squared: float
    dw_stat: float
    condition_number: float
    se_mode: Literal["classical", "hac"] = "classical"
    hac_lags: Optional[int] = None

    @property
    def beta0(self) -> float:
        return self.coefficients[CONST]

    @property
    def beta1(self) -> float:
        return self.coefficients[GEPU]

    @property
    def beta2(self) -> Optional[float]:
        return self.coefficients.get(LAGGED_DEP)

    @property
    def t_beta1(self) -> float:
        return self.t_stats[GEPU]

    @property
    def t_beta2(self) -> Optional[float]:
        return self.t_stats.get(LAGGED_DEP)

    @property
    def p_beta1(self) -> float:
        return self.p_values[GEPU]


class Table1Row(BaseModel):
    window_size: int
    t0: str
    obs: int
    correlation: float


class Table2Cell(BaseModel):
    """One regression of the Table-2 sweep, keyed by (panel, proxy, T, spec)"""

    panel: Literal["A", "B"]
    proxy: Literal["PCA", "GDP"]
    window_size: int
    spec: Literal["simple", "lagged"]
    result: RegressionResult

    @property
    def key(self) -> str:
        return f"{self.panel}/{self.proxy}/T={self.window_size}/{self.spec}"


class Table2(BaseModel):
    cells: List[Table2Cell] = Field(default_factory=list)
    metadata: Dict[str, str] = Field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.cells)

    def panel_cells(self, panel: str) -> List[Table2Cell]:
        return [c for c in self.cells if c.panel == panel]

    def summary(self, significance: float = 0.10) -> Dict[str, Dict[str, int]]:
        """Count of positive and significant beta1 estimates per panel"""
        out = {}
        for panel in ("A", "B"):
            cells = self.panel_cells(panel)
            out[panel] = {
                "regressions": len(cells),
                "beta1_positive": sum(c.result.beta1 > 0 for c in cells),
                "beta1_significant": sum(c.result.p_beta1 < significance for c in cells),
            }
        return out

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for c in self.cells:
            r = c.result
            rows.append(
                {
                    "panel": c.panel,
                    "proxy": c.proxy,
                    "T": c.window_size,
                    "spec": c.spec,
                    "obs": r.n_obs,
                    "beta1": r.beta1,
                    "t_beta1": r.t_beta1,
                    "beta2": r.beta2,
                    "t_beta2": r.t_beta2,
                    "r2": r.r_squared,
                }
            )
        return pd.DataFrame(
            rows,
            columns=["panel", "proxy", "T", "spec", "obs", "beta1", "t_beta1", "beta2", "t_beta2", "r2"],
        )


def table1_frame(rows: List[Table1Row]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"T": r.window_size, "t0": r.t0, "obs": r.obs, "correlation": r.correlation} for r in rows],
        columns=["T", "t0", "obs", "correlation"],
    )


def months_label(months: pd.PeriodIndex) -> str:
    return f"{month_key(months[0])}..{month_key(months[-1])}" if len(months) else "(empty)"
