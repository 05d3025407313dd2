"""
Global EPU indices: rolling eigenportfolio (PCA) and the GDP-weighted baseline
"""
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.config.settings import settings
from src.ingest.models import EpuPanel, GdpWeightTable, as_month, month_key
from src.pca_index.eigen import leading_eigenpair
from src.pca_index.models import EigenPair, GepuSeries
from src.pca_index.normalization import correlation_matrix, normalize_window
from src.utils import get_logger
from src.utils.errors import (
    ConvergenceError,
    DegenerateWeightsError,
    InsufficientHistoryError,
    MissingWeightYearError,
    RangeError,
    ZeroVarianceError,
)

logger = get_logger("pca_index.gepu")


def eigenportfolio_index(eig: EigenPair, epu_at_t: Sequence[float]) -> float:
    """GEPU(t) = u . EPU(t) / sum(u)"""
    u = np.asarray(eig.eigenvector, dtype=float)
    levels = np.asarray(epu_at_t, dtype=float)
    total = float(u.sum())
    if abs(total) < settings.DEGENERATE_WEIGHT_SUM:
        raise DegenerateWeightsError(
            f"eigenvector components sum to {total:.3e}; eigenportfolio weights undefined",
            operation="eigenportfolio_index",
        )
    return float(u @ levels / total)


def window_start_month(panel: EpuPanel, window_size: int) -> pd.Period:
    """First month with a full window behind it (the T-th panel month)"""
    return panel.first_month + (window_size - 1)


def compute_gepu_pca(panel: EpuPanel, window_size: int) -> GepuSeries:
    """Rolling eigenportfolio index over every right-aligned window of ``window_size`` months"""
    op = "compute_gepu_pca"
    n_months = len(panel.months)
    if window_size < 2:
        raise InsufficientHistoryError(f"window size must be >= 2, got {window_size}", operation=op)
    if n_months < window_size:
        raise InsufficientHistoryError(
            f"panel has {n_months} months, window needs {window_size}",
            operation=op,
        )

    n = len(panel.economies)
    levels = panel.values.to_numpy(dtype=float)
    months = panel.months[window_size - 1:]
    values = np.empty(len(months))
    shares = np.empty(len(months))
    history: Dict[pd.Period, EigenPair] = {}

    for k, month in enumerate(months):
        try:
            nw = normalize_window(panel, month, window_size)
            eig = leading_eigenpair(correlation_matrix(nw))
            values[k] = eigenportfolio_index(eig, levels[window_size - 1 + k])
        except (ZeroVarianceError, ConvergenceError, DegenerateWeightsError) as e:
            raise e.add_context(f"T={window_size} window ending {month_key(month)}")
        history[month] = eig
        shares[k] = eig.eigenvalue / n
        logger.debug(f"T={window_size} {month_key(month)}: lambda1/N={shares[k]:.4f} iterations={eig.iterations}")

    index = pd.PeriodIndex(months, freq="M", name="month")
    series = GepuSeries(
        method="PCA",
        window_size=window_size,
        economies=panel.economies,
        values=pd.Series(values, index=index, name="gepu"),
        eigen_history=history,
        explained_share=pd.Series(shares, index=index, name="lambda1_over_n"),
    )
    logger.info(
        f"Computed {series.label}: t0={month_key(series.start_month)}, {series.count} observations"
    )
    return series


def standardize_over_base(panel: EpuPanel, base_period: Tuple[str, str]) -> EpuPanel:
    """Rescale each national series to unit standard deviation over ``base_period``"""
    first, last = as_month(base_period[0]), as_month(base_period[1])
    if last < first or first < panel.first_month or last > panel.last_month:
        raise RangeError(
            f"base period {month_key(first)}..{month_key(last)} outside panel",
            operation="compute_gepu_gdp",
        )
    base = panel.values.loc[first:last]
    sigmas = base.std(axis=0, ddof=1)
    flat = sigmas[~(sigmas > 0)]
    if len(flat):
        raise ZeroVarianceError(
            f"constant EPU over base period for {', '.join(map(str, flat.index))}",
            operation="compute_gepu_gdp",
        )
    return EpuPanel(values=panel.values / sigmas)


def compute_gepu_gdp(
    panel: EpuPanel,
    weights: GdpWeightTable,
    base_period: Optional[Tuple[str, str]] = None,
) -> GepuSeries:
    """Within-month GDP-weighted average of national EPU, using each month's calendar-year weights"""
    op = "compute_gepu_gdp"
    source = standardize_over_base(panel, base_period) if base_period else panel
    economies = panel.economies

    year_weights: Dict[int, np.ndarray] = {}
    for year in sorted({m.year for m in panel.months}):
        w = weights.weights_for(year, economies)
        if w.empty:
            raise MissingWeightYearError(
                f"no GDP weights for {year} covering the panel economies",
                operation=op,
                location=f"year={year}",
            )
        year_weights[year] = w.to_numpy(dtype=float)

    levels = source.values.to_numpy(dtype=float)
    values = np.array([levels[k] @ year_weights[m.year] for k, m in enumerate(panel.months)])

    metadata = {"weighting": "annual GDP shares renormalized over panel economies"}
    if base_period:
        metadata["base_period"] = f"{base_period[0]}..{base_period[1]}"
    series = GepuSeries(
        method="GDP",
        economies=economies,
        values=pd.Series(values, index=panel.months.copy(), name="gepu"),
        metadata=metadata,
    )
    logger.info(f"Computed GEPU-GDP: {month_key(series.start_month)}..{month_key(series.end_month)}")
    return series
