"""
Sample alignment and OLS estimation for the volatility/correlation regressions

    y(t) = b0 + b1 GEPU(t) [+ b2 y(t-1)] + e(t)
"""
import math
import warnings
from typing import Literal, Optional

import numpy as np
import pandas as pd
import statsmodels.api as sm
from statsmodels.stats.stattools import durbin_watson

from src.config.settings import settings
from src.econometrics.models import (
    GEPU,
    LAGGED_DEP,
    AlignedSample,
    RegressionResult,
    months_label,
)
from src.market_metrics.models import MonthlySeries
from src.pca_index.models import GepuSeries
from src.utils import get_logger
from src.utils.errors import (
    IllConditionedWarning,
    InsufficientOverlapError,
    RankDeficiencyError,
    ZeroVarianceDependentError,
)

logger = get_logger("econometrics.regression")

_SPEC_PREFIX = {"volatility": "vol", "avg_correlation": "corr"}


def newey_west_lags(n: int) -> int:
    """Bandwidth rule floor(4 (n/100)^(2/9))"""
    return int(math.floor(4 * (n / 100.0) ** (2.0 / 9.0)))


def align(
    gepu: GepuSeries,
    dep: MonthlySeries,
    with_lag: bool,
    standardize: bool = False,
) -> AlignedSample:
    """Common months of GEPU and the dependent series.

    With ``with_lag`` a month is kept only when the dependent series also has
    the previous calendar month, which may predate GEPU support.
    """
    common = gepu.months.intersection(dep.months).sort_values()
    if with_lag:
        dep_months = set(dep.months)
        common = pd.PeriodIndex([m for m in common if (m - 1) in dep_months], freq="M", name="month")

    needed = settings.MIN_ALIGNED_MONTHS + (1 if with_lag else 0)
    if len(common) < needed:
        raise InsufficientOverlapError(
            f"{len(common)} aligned months between {gepu.label} and {dep.kind}, need {needed}",
            operation="align",
            location=f"gepu {months_label(gepu.months)} / {dep.kind} {months_label(dep.months)}",
        )

    y = dep.values.loc[common].astype(float)
    x = gepu.values.loc[common].to_numpy(dtype=float)
    if standardize:
        x = (x - x.mean()) / x.std(ddof=1)
    regressors = pd.DataFrame({GEPU: x}, index=common)
    if with_lag:
        regressors[LAGGED_DEP] = dep.values.loc[common - 1].to_numpy(dtype=float)

    spec = f"{_SPEC_PREFIX[dep.kind]}_{'lagged' if with_lag else 'simple'}"
    return AlignedSample(spec=spec, y=y, regressors=regressors)


def ols(
    sample: AlignedSample,
    se_mode: Literal["classical", "hac"] = "classical",
    hac_lags: Optional[int] = None,
) -> RegressionResult:
    """Least-squares fit with an intercept; classical or Newey-West (HAC) standard errors"""
    op = "ols"
    y = sample.y.to_numpy(dtype=float)
    if np.ptp(y) == 0.0:
        raise ZeroVarianceDependentError(
            "dependent variable is constant; t-statistics undefined",
            operation=op,
            location=sample.spec,
            module="econometrics",
        )

    X = sm.add_constant(sample.regressors, has_constant="add")
    k = X.shape[1]
    if np.linalg.matrix_rank(X.to_numpy()) < k:
        raise RankDeficiencyError(
            f"design matrix with columns {list(X.columns)} is rank deficient",
            operation=op,
            location=sample.spec,
        )
    condition = float(np.linalg.cond(X.to_numpy()))
    if condition > settings.CONDITION_LIMIT:
        warnings.warn(
            f"design matrix condition number {condition:.3e} exceeds {settings.CONDITION_LIMIT:.0e}",
            IllConditionedWarning,
            stacklevel=2,
        )

    model = sm.OLS(y, X)
    lags = None
    if se_mode == "hac":
        lags = newey_west_lags(len(y)) if hac_lags is None else hac_lags
        fit = model.fit(cov_type="HAC", cov_kwds={"maxlags": lags})
    else:
        fit = model.fit()

    params = fit.params
    bse = fit.bse
    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = {n: float(np.float64(params[n]) / np.float64(bse[n])) for n in X.columns}
    names = list(X.columns)
    residuals = pd.Series(np.asarray(fit.resid), index=sample.months, name="residual")
    result = RegressionResult(
        spec=sample.spec,
        coefficients={n: float(params[n]) for n in names},
        std_errors={n: float(bse[n]) for n in names},
        t_stats=t_stats,
        p_values={n: float(fit.pvalues[n]) for n in names},
        residuals=residuals,
        n_obs=int(fit.nobs),
        r_squared=float(fit.rsquared),
        dw_stat=float(durbin_watson(residuals.to_numpy())),
        condition_number=condition,
        se_mode=se_mode,
        hac_lags=lags,
    )
    logger.debug(
        f"OLS {sample.spec} n={result.n_obs}: b1={result.beta1:.6g} t={result.t_beta1:.3f} R2={result.r_squared:.4f}"
    )
    return result
