"""
Seeded synthetic inputs shared by the test suites
"""
from pathlib import Path
from typing import List, Tuple

import numpy as np
import pandas as pd

from src.ingest import DailyPricePanel, EpuPanel

ECONOMIES = [
    "AU", "BR", "CA", "CL", "CN", "FR", "DE", "GR", "IN", "IE",
    "IT", "JP", "MX", "NL", "RU", "KR", "ES", "SE", "UK", "US",
]


def month_index(start: str, count: int) -> pd.PeriodIndex:
    return pd.period_range(start=start, periods=count, freq="M", name="month")


def random_panel(seed: int, n_months: int = 36, economies: List[str] = ECONOMIES[:5], start: str = "2003-01") -> EpuPanel:
    rng = np.random.default_rng(seed)
    values = 100.0 + 20.0 * rng.standard_normal((n_months, len(economies))).cumsum(axis=0) / 4
    values = np.abs(values) + 10.0
    return EpuPanel(values=pd.DataFrame(values, index=month_index(start, n_months), columns=list(economies)))


def one_factor_panel(
    seed: int,
    n_months: int = 192,
    n_economies: int = 20,
    noise: float = 0.01,
    start: str = "2003-01",
) -> Tuple[EpuPanel, pd.Series]:
    """EPU_i = a_i F + b_i + noise, noise sd = ``noise`` x the signal sd of each economy"""
    rng = np.random.default_rng(seed)
    factor = 100.0 * np.exp(np.cumsum(rng.standard_normal(n_months) * 0.05))
    loadings = rng.uniform(0.5, 2.0, n_economies)
    offsets = rng.uniform(50.0, 150.0, n_economies)
    signal = np.outer(factor, loadings) + offsets
    signal_sd = signal.std(axis=0)
    values = np.maximum(signal + rng.standard_normal(signal.shape) * noise * signal_sd, 1.0)
    index = month_index(start, n_months)
    panel = EpuPanel(values=pd.DataFrame(values, index=index, columns=ECONOMIES[:n_economies]))
    return panel, pd.Series(factor, index=index)


def random_correlation_matrix(rng: np.random.Generator, n: int, t: int = None) -> np.ndarray:
    """Sample correlation of ``t`` draws with a common factor, so the top eigenvalue is separated"""
    t = t or max(3 * n, 10)
    common = rng.standard_normal(t)
    loadings = rng.uniform(0.3, 1.0, n)
    data = np.outer(common, loadings) + rng.standard_normal((t, n))
    return np.corrcoef(data, rowvar=False)


def price_panel(
    seed: int,
    start: str = "2002-12-02",
    end: str = "2007-12-31",
    markets: List[str] = ("MKT1", "MKT2", "MKT3", "MKT4"),
    world_id: str = "MSCI_ACWI",
    holiday_rate: float = 0.02,
) -> DailyPricePanel:
    """Correlated geometric random walks on business days with scattered single-day holidays"""
    rng = np.random.default_rng(seed)
    dates = pd.bdate_range(start, end, name="date")
    common = rng.standard_normal(len(dates)) * 0.008
    columns = {}
    for name in markets:
        r = common + rng.standard_normal(len(dates)) * 0.006
        columns[name] = 100.0 * np.exp(np.cumsum(r))
    columns[world_id] = 100.0 * np.exp(np.cumsum(common * 0.9 + rng.standard_normal(len(dates)) * 0.002))
    frame = pd.DataFrame(columns, index=dates)
    for name in markets:
        holidays = rng.random(len(dates)) < holiday_rate
        holidays[0] = False
        frame.loc[holidays, name] = np.nan
    return DailyPricePanel(prices=frame)


def write_inputs(directory: Path, seed: int = 7, n_months: int = 60) -> dict:
    """EPU panel, daily prices and GDP files for a pipeline run; returns their paths"""
    directory = Path(directory)
    panel, _ = one_factor_panel(seed, n_months=n_months, n_economies=6, noise=0.2)
    epu = panel.values.copy()
    epu.index = [m.strftime("%Y-%m") for m in epu.index]
    epu.index.name = "month"
    epu_path = directory / "epu_panel.csv"
    epu.to_csv(epu_path, float_format="%.17g", lineterminator="\n")

    last_month = panel.last_month.to_timestamp(how="end").strftime("%Y-%m-%d")
    prices = price_panel(seed, end=last_month).prices.copy()
    prices.index = prices.index.strftime("%Y-%m-%d")
    prices.index.name = "date"
    prices_path = directory / "daily_prices.csv"
    prices.to_csv(prices_path, float_format="%.10g", lineterminator="\n")

    rng = np.random.default_rng(seed)
    rows = []
    for year in sorted({m.year for m in panel.months}):
        for economy in panel.economies:
            rows.append({"year": year, "economy": economy, "gdp_value": round(rng.uniform(100, 2000), 1)})
    gdp_path = directory / "gdp.csv"
    pd.DataFrame(rows).to_csv(gdp_path, index=False, lineterminator="\n")

    return {"epu_path": epu_path, "prices_path": prices_path, "gdp_path": gdp_path}
