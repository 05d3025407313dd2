"""
Monthly realized volatility and equal-weighted average pairwise correlation
"""
from typing import Iterable, Optional, Tuple

import numpy as np
import pandas as pd

from src.config.settings import settings
from src.ingest.models import as_month, month_key
from src.market_metrics.models import MonthlySeries, ReturnPanel
from src.utils import get_logger
from src.utils.errors import InsufficientObservationsError, NoValidPairsError

logger = get_logger("market_metrics.monthly")


def monthly_volatility(
    returns: ReturnPanel,
    series_id: str,
    month,
    min_obs: int = settings.MIN_VOLATILITY_OBS,
) -> float:
    """Sample standard deviation (n-1) of one series' daily returns in a calendar month, not annualized"""
    month = as_month(month)
    if series_id not in returns.returns.columns:
        raise KeyError(f"unknown series {series_id!r}")
    observed = returns.month_block(month)[series_id].dropna().to_numpy()
    if len(observed) < max(min_obs, 2):
        raise InsufficientObservationsError(
            f"{len(observed)} returns for {series_id}, need {max(min_obs, 2)}",
            operation="monthly_volatility",
            location=f"{series_id} {month_key(month)}",
        )
    return float(np.std(observed, ddof=1))


def pairwise_correlation_stats(
    block: pd.DataFrame, min_overlap: int
) -> Tuple[float, int, int]:
    """(mean correlation, included pairs, excluded pairs) for one month of returns"""
    n = block.shape[1]
    total_pairs = n * (n - 1) // 2
    if n < 2:
        return float("nan"), 0, total_pairs
    # pandas uses pairwise-complete observations; short overlaps and flat members give NaN
    with np.errstate(divide="ignore", invalid="ignore"):
        corr = block.corr(method="pearson", min_periods=min_overlap).to_numpy()
    upper = corr[np.triu_indices(n, k=1)]
    valid = upper[np.isfinite(upper)]
    if len(valid) == 0:
        return float("nan"), 0, total_pairs
    mean = float(np.clip(valid.mean(), -1.0, 1.0))
    return mean, len(valid), total_pairs - len(valid)


def monthly_avg_pairwise_correlation(
    returns: ReturnPanel,
    month,
    min_overlap: int = settings.DEFAULT_MIN_OVERLAP,
    exclude: Iterable[str] = (),
) -> float:
    """Mean Pearson correlation over all market pairs with at least ``min_overlap`` shared return dates"""
    month = as_month(month)
    block = returns.month_block(month).drop(columns=list(exclude), errors="ignore")
    mean, included, _ = pairwise_correlation_stats(block, min_overlap)
    if included == 0:
        raise NoValidPairsError(
            f"no series pair has {min_overlap} overlapping non-degenerate returns",
            operation="monthly_avg_pairwise_correlation",
            location=month_key(month),
        )
    return mean


def volatility_series(
    returns: ReturnPanel,
    series_id: str,
    min_obs: int = settings.MIN_VOLATILITY_OBS,
) -> MonthlySeries:
    """Monthly volatility of ``series_id`` over every month with enough returns"""
    values, support, skipped = {}, {}, []
    for month in returns.calendar_months():
        observed = int(returns.month_block(month)[series_id].notna().sum())
        try:
            values[month] = monthly_volatility(returns, series_id, month, min_obs)
        except InsufficientObservationsError:
            skipped.append(month_key(month))
            continue
        support[month] = observed

    if skipped:
        logger.warning(f"Volatility skipped {len(skipped)} month(s) with < {min_obs} returns: {', '.join(skipped)}")
    logger.info(f"Computed monthly volatility of {series_id}: {len(values)} months")
    return MonthlySeries(
        kind="volatility",
        values=_monthly(values, "value", float),
        support=_monthly(support, "support", int),
        metadata={
            "series_id": series_id,
            "return_kind": returns.return_kind,
            "holiday_mode": returns.holiday_mode,
            "divisor": "n-1",
            "annualized": "false",
            "skipped_months": ",".join(skipped),
        },
    )


def avg_correlation_series(
    returns: ReturnPanel,
    min_overlap: int = settings.DEFAULT_MIN_OVERLAP,
    exclude: Optional[Iterable[str]] = None,
) -> MonthlySeries:
    """Monthly equal-weighted average pairwise correlation across the national indices"""
    exclude = list(exclude or [])
    values, support, skipped = {}, {}, []
    excluded_pairs = 0
    for month in returns.calendar_months():
        block = returns.month_block(month).drop(columns=exclude, errors="ignore")
        mean, included, excluded = pairwise_correlation_stats(block, min_overlap)
        excluded_pairs += excluded
        if included == 0:
            skipped.append(month_key(month))
            continue
        values[month] = mean
        support[month] = included

    if skipped:
        logger.warning(f"Average correlation skipped {len(skipped)} month(s) without valid pairs")
    if excluded_pairs:
        logger.warning(f"Excluded {excluded_pairs} month-pair(s) with overlap < {min_overlap} or flat returns")
    logger.info(f"Computed average pairwise correlation: {len(values)} months")
    return MonthlySeries(
        kind="avg_correlation",
        values=_monthly(values, "value", float),
        support=_monthly(support, "support", int),
        metadata={
            "return_kind": returns.return_kind,
            "holiday_mode": returns.holiday_mode,
            "min_overlap": str(min_overlap),
            "excluded_pairs": str(excluded_pairs),
            "excluded_series": ",".join(exclude),
            "skipped_months": ",".join(skipped),
        },
    )


def _monthly(mapping: dict, name: str, dtype) -> pd.Series:
    index = pd.PeriodIndex(list(mapping.keys()), freq="M", name="month")
    return pd.Series(list(mapping.values()), index=index, name=name, dtype=dtype)
