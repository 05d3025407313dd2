"""
Index construction types: normalized windows, correlation matrices, eigenpairs, GEPU series
"""
from typing import Dict, List, Literal, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.ingest.models import as_month, month_key


class NormalizedWindow(BaseModel):
    """N x T block of z-scored EPU values over ``[window_end - T + 1, window_end]``"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    window_end: pd.Period
    window_size: int
    economies: List[str]
    x: np.ndarray
    means: np.ndarray
    sigmas: np.ndarray

    @property
    def window_start(self) -> pd.Period:
        return self.window_end - (self.window_size - 1)

    @property
    def label(self) -> str:
        return f"{month_key(self.window_start)}..{month_key(self.window_end)}"


class CorrelationMatrix(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: np.ndarray
    economies: List[str] = Field(default_factory=list)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])


class EigenPair(BaseModel):
    """Leading eigenvalue/eigenvector of a correlation matrix, sign fixed so the vector sums positive"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalue: float
    eigenvector: np.ndarray
    iterations: int
    residual: float
    spectral_gap: Optional[float] = None
    degenerate: bool = False

    @property
    def weights(self) -> np.ndarray:
        """Eigenportfolio weights u_i / sum(u); they sum to one"""
        return self.eigenvector / self.eigenvector.sum()


class GepuSeries(BaseModel):
    """Monthly global EPU index with provenance"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    method: Literal["PCA", "GDP"]
    values: pd.Series
    window_size: Optional[int] = None
    economies: List[str] = Field(default_factory=list)
    eigen_history: Dict[pd.Period, EigenPair] = Field(default_factory=dict)
    explained_share: Optional[pd.Series] = None
    metadata: Dict[str, str] = Field(default_factory=dict)

    @property
    def start_month(self) -> pd.Period:
        return self.values.index[0]

    @property
    def end_month(self) -> pd.Period:
        return self.values.index[-1]

    @property
    def months(self) -> pd.PeriodIndex:
        return self.values.index

    @property
    def count(self) -> int:
        return len(self.values)

    @property
    def label(self) -> str:
        if self.method == "PCA":
            return f"GEPU-PCA(T={self.window_size})"
        return "GEPU-GDP"

    def truncate(self, first) -> "GepuSeries":
        """Copy restricted to months from ``first`` onward"""
        first = as_month(first)
        values = self.values.loc[first:]
        share = self.explained_share.loc[first:] if self.explained_share is not None else None
        history = {m: e for m, e in self.eigen_history.items() if m >= first}
        return self.model_copy(
            update={"values": values, "explained_share": share, "eigen_history": history}
        )

    def to_frame(self) -> pd.DataFrame:
        """Serialized layout: month,gepu[,lambda1_over_n,u_<economy>...]"""
        frame = pd.DataFrame({"month": [month_key(m) for m in self.months], "gepu": self.values.to_numpy()})
        if self.method == "PCA":
            frame["lambda1_over_n"] = self.explained_share.to_numpy()
            vectors = np.vstack([self.eigen_history[m].eigenvector for m in self.months])
            for j, economy in enumerate(self.economies):
                frame[f"u_{economy}"] = vectors[:, j]
        return frame
