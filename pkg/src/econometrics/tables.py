"""
Index comparison (Table 1), the forty-regression sweep (Table 2) and overlay rescaling
"""
from typing import List, Literal, Optional, Sequence

import numpy as np
import pandas as pd
from scipy import stats

from src.econometrics.models import Table1Row, Table2, Table2Cell
from src.econometrics.regression import align, ols
from src.ingest.models import month_key
from src.market_metrics.models import MonthlySeries
from src.pca_index.models import GepuSeries
from src.utils import get_logger
from src.utils.errors import GepuError, InsufficientOverlapError, ZeroVarianceError

logger = get_logger("econometrics.tables")


def _as_pair(a: Sequence[float], b: Sequence[float], operation: str):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"{operation}: length mismatch ({len(a)} vs {len(b)})")
    if len(a) < 2:
        raise InsufficientOverlapError(
            f"need at least 2 values, got {len(a)}", operation=operation, module="econometrics"
        )
    return a, b


def pearson_correlation(a: Sequence[float], b: Sequence[float]) -> float:
    a, b = _as_pair(a, b, "pearson_correlation")
    for name, values in (("a", a), ("b", b)):
        if np.ptp(values) == 0.0:
            raise ZeroVarianceError(
                f"argument {name} is constant",
                operation="pearson_correlation",
                module="econometrics",
            )
    r = stats.pearsonr(a, b)[0]
    return float(np.clip(r, -1.0, 1.0))


def rescale_to_match(series: Sequence[float], target: Sequence[float]) -> np.ndarray:
    """Affine copy of ``series`` with the sample mean and variance of ``target``"""
    s, t = _as_pair(series, target, "rescale_to_match")
    s_sd = s.std(ddof=1)
    t_sd = t.std(ddof=1)
    if t_sd == 0.0:
        raise ZeroVarianceError("target is constant", operation="rescale_to_match", module="econometrics")
    if s_sd == 0.0:
        raise ZeroVarianceError("series is constant", operation="rescale_to_match", module="econometrics")
    return (s - s.mean()) * (t_sd / s_sd) + t.mean()


def run_table1(gepu_pca: List[GepuSeries], gepu_gdp: GepuSeries) -> List[Table1Row]:
    """Correlation of each PCA index with the GDP baseline over the PCA support"""
    rows = []
    for pca in gepu_pca:
        common = pca.months.intersection(gepu_gdp.months)
        correlation = pearson_correlation(pca.values.loc[common], gepu_gdp.values.loc[common])
        rows.append(
            Table1Row(
                window_size=pca.window_size,
                t0=month_key(pca.start_month),
                obs=pca.count,
                correlation=correlation,
            )
        )
        logger.info(f"T={pca.window_size}: t0={month_key(pca.start_month)} obs={pca.count} corr={correlation:.4f}")
    return rows


def run_table2(
    gepu_pca: List[GepuSeries],
    gepu_gdp: GepuSeries,
    vol: MonthlySeries,
    corr: MonthlySeries,
    se_mode: Literal["classical", "hac"] = "classical",
    hac_lags: Optional[int] = None,
    standardize: bool = False,
) -> Table2:
    """Every (dependent, window, proxy, spec) regression; GDP is truncated to each window's support"""
    cells = []
    for panel, dep in (("A", vol), ("B", corr)):
        for pca in sorted(gepu_pca, key=lambda s: s.window_size):
            gdp = gepu_gdp.truncate(pca.start_month)
            for proxy, gepu in (("PCA", pca), ("GDP", gdp)):
                for spec in ("simple", "lagged"):
                    key = f"{panel}/{proxy}/T={pca.window_size}/{spec}"
                    try:
                        sample = align(gepu, dep, with_lag=(spec == "lagged"), standardize=standardize)
                        result = ols(sample, se_mode=se_mode, hac_lags=hac_lags)
                    except GepuError as e:
                        raise e.add_context(f"Table-2 cell {key}")
                    cells.append(
                        Table2Cell(panel=panel, proxy=proxy, window_size=pca.window_size, spec=spec, result=result)
                    )

    table = Table2(
        cells=cells,
        metadata={
            "se_mode": se_mode,
            "gdp_truncated_to_pca_support": "true",
            "regressor": "standardized" if standardize else "levels",
        },
    )
    summary = table.summary()
    logger.info(
        f"Table 2: {len(table)} regressions; beta1>0 in {summary['A']['beta1_positive']}/{summary['A']['regressions']} "
        f"volatility and {summary['B']['beta1_positive']}/{summary['B']['regressions']} correlation cells"
    )
    return table


def overlay_frame(
    dep: MonthlySeries,
    gepu_pca: GepuSeries,
    gepu_gdp: Optional[GepuSeries] = None,
) -> pd.DataFrame:
    """Dependent series with GEPU rescaled to its mean and variance on the common months"""
    common = dep.months.intersection(gepu_pca.months)
    if gepu_gdp is not None:
        common = common.intersection(gepu_gdp.months)
    common = common.sort_values()
    target = dep.values.loc[common].to_numpy(dtype=float)
    frame = pd.DataFrame({"month": [month_key(m) for m in common], "value": target})
    frame["gepu_pca_rescaled"] = rescale_to_match(gepu_pca.values.loc[common], target)
    if gepu_gdp is not None:
        frame["gepu_gdp_rescaled"] = rescale_to_match(gepu_gdp.values.loc[common], target)
    return frame
