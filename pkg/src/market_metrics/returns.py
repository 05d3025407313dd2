"""
Daily returns from closing prices without forward-filling holidays
"""
from typing import Literal

import numpy as np
import pandas as pd

from src.config.settings import settings
from src.ingest.models import DailyPricePanel
from src.market_metrics.models import ReturnPanel
from src.utils import get_logger

logger = get_logger("market_metrics.returns")


def daily_returns(
    prices: DailyPricePanel,
    holiday_mode: Literal["bridge", "strict"] = "bridge",
    return_kind: Literal["simple", "log"] = "simple",
    max_bridge_gap: int = settings.MAX_BRIDGE_GAP,
) -> ReturnPanel:
    """Per-series returns between consecutive present prices.

    ``strict`` only pairs prices on adjacent rows. ``bridge`` also pairs prices
    separated by at most ``max_bridge_gap`` absent rows when both fall in the
    same calendar month. The return is stamped on the later date; everything
    else stays absent, never zero.
    """
    frame = prices.prices
    months = frame.index.to_period("M").asi8
    out = np.full(frame.shape, np.nan)

    for j, column in enumerate(frame.columns):
        p = frame[column].to_numpy(dtype=float)
        present = np.flatnonzero(~np.isnan(p))
        if len(present) < 2:
            continue
        prev, curr = present[:-1], present[1:]
        skipped = curr - prev - 1
        usable = skipped == 0
        if holiday_mode == "bridge":
            usable |= (skipped <= max_bridge_gap) & (months[prev] == months[curr])
        prev, curr = prev[usable], curr[usable]
        ratio = p[curr] / p[prev]
        out[curr, j] = np.log(ratio) if return_kind == "log" else ratio - 1.0

    returns = pd.DataFrame(out, index=frame.index.copy(), columns=list(frame.columns))
    logger.debug(
        f"Computed {return_kind} returns ({holiday_mode} mode): "
        f"{int(np.isfinite(out).sum())} present cells"
    )
    return ReturnPanel(returns=returns, return_kind=return_kind, holiday_mode=holiday_mode)
