"""
Tests for daily returns, monthly volatility and average pairwise correlation
"""
import numpy as np
import pandas as pd
import pytest

from src.ingest import DailyPricePanel
from src.market_metrics import (
    ReturnPanel,
    avg_correlation_series,
    daily_returns,
    monthly_avg_pairwise_correlation,
    monthly_volatility,
    pairwise_correlation_stats,
    volatility_series,
)
from src.utils.errors import InsufficientObservationsError, NoValidPairsError
from tests.synthetic import price_panel


def prices(columns, start="2003-01-02"):
    frame = pd.DataFrame(columns, dtype=float)
    frame.index = pd.bdate_range(start, periods=len(frame), name="date")
    return DailyPricePanel(prices=frame)


def returns(columns, start="2003-03-03"):
    frame = pd.DataFrame(columns, dtype=float)
    frame.index = pd.bdate_range(start, periods=len(frame), name="date")
    return ReturnPanel(returns=frame)


class TestDailyReturns:
    """Test cases for daily_returns"""

    def test_simple_returns(self):
        r = daily_returns(prices({"A": [100.0, 101.0, 99.99]})).returns["A"]
        assert np.isnan(r.iloc[0])
        np.testing.assert_allclose(r.iloc[1:].to_numpy(), [0.01, -0.01], atol=1e-12)

    def test_constant_prices(self):
        r = daily_returns(prices({"A": [50.0, 50.0, 50.0]})).returns["A"].dropna()
        assert list(r) == [0.0, 0.0]

    def test_holiday_bridge_and_strict(self):
        panel = prices({"A": [100.0, np.nan, 110.0]})
        bridged = daily_returns(panel, holiday_mode="bridge").returns["A"].dropna()
        strict = daily_returns(panel, holiday_mode="strict").returns["A"].dropna()
        np.testing.assert_allclose(bridged.to_numpy(), [0.10], atol=1e-12)
        assert bridged.index[0] == pd.Timestamp("2003-01-06")
        assert strict.empty

    def test_bridge_stays_within_month(self):
        # 2003-01-30, 2003-01-31 (absent), 2003-02-03
        panel = prices({"A": [100.0, np.nan, 105.0]}, start="2003-01-30")
        assert daily_returns(panel).returns["A"].dropna().empty

    def test_long_gap_is_not_bridged(self):
        panel = prices({"A": [100.0, np.nan, np.nan, np.nan, 104.0]}, start="2003-01-06")
        assert daily_returns(panel).returns["A"].dropna().empty

    def test_log_returns(self):
        r = daily_returns(prices({"A": [100.0, 110.0]}), return_kind="log").returns["A"].dropna()
        assert r.iloc[0] == pytest.approx(np.log(1.1), abs=1e-15)

    def test_no_zero_fill(self):
        panel = price_panel(4, end="2003-06-30", holiday_rate=0.1)
        out = daily_returns(panel, holiday_mode="strict").returns
        absent = panel.prices.isna()
        assert out[absent].isna().all().all()

    def test_cumulative_reconstruction(self):
        panel = price_panel(5, end="2004-12-31", holiday_rate=0.0)
        r = daily_returns(panel).returns
        for column in panel.series:
            p = panel.prices[column].to_numpy()
            rebuilt = p[0] * np.cumprod(1.0 + r[column].fillna(0.0).to_numpy())
            np.testing.assert_allclose(rebuilt, p, rtol=1e-10)


class TestMonthlyVolatility:
    """Test cases for monthly_volatility"""

    def test_two_point_sample_std(self):
        panel = returns({"W": [0.01, 0.03]})
        assert monthly_volatility(panel, "W", "2003-03", min_obs=2) == pytest.approx(0.014142, abs=1e-6)

    def test_constant_returns(self):
        panel = returns({"W": [0.002] * 8})
        assert monthly_volatility(panel, "W", "2003-03") == pytest.approx(0.0, abs=1e-15)

    def test_too_few_returns(self):
        panel = returns({"W": [0.01, -0.02, 0.005]})
        with pytest.raises(InsufficientObservationsError):
            monthly_volatility(panel, "W", "2003-03")

    def test_only_calendar_month_counts(self):
        # 2003-02-24 .. 2003-03-07: five February and five March returns
        panel = returns({"W": [0.01, 0.02, -0.01, 0.0, 0.03, 0.5, -0.5, 0.5, -0.5, 0.5]}, start="2003-02-24")
        feb = monthly_volatility(panel, "W", "2003-02")
        assert feb == pytest.approx(np.std([0.01, 0.02, -0.01, 0.0, 0.03], ddof=1))

    def test_price_scale_invariance(self):
        panel = price_panel(6, end="2003-03-31")
        scaled = DailyPricePanel(prices=panel.prices * 37.5)
        a = monthly_volatility(daily_returns(panel), "MSCI_ACWI", "2003-02")
        b = monthly_volatility(daily_returns(scaled), "MSCI_ACWI", "2003-02")
        assert b == pytest.approx(a, rel=1e-12)

    def test_series_skips_thin_months(self):
        panel = price_panel(7, start="2003-01-27", end="2003-04-30", holiday_rate=0.0)
        series = volatility_series(daily_returns(panel), "MSCI_ACWI")
        # January has only four returns
        assert pd.Period("2003-01", "M") not in series.values.index
        assert series.metadata["skipped_months"] == "2003-01"
        assert (series.values >= 0).all()
        assert series.metadata["divisor"] == "n-1"


def equal_correlation_returns(c: float, n_series: int = 3, n_days: int = 20, seed: int = 0) -> dict:
    """Series whose pairwise sample correlations are all exactly ``c``"""
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((n_days, n_series + 1))
    raw -= raw.mean(axis=0)
    q, _ = np.linalg.qr(raw)
    common, idio = q[:, 0], q[:, 1:]
    return {
        f"S{i}": 0.01 * (np.sqrt(c) * common + np.sqrt(1.0 - c) * idio[:, i])
        for i in range(n_series)
    }


class TestAveragePairwiseCorrelation:
    """Test cases for monthly_avg_pairwise_correlation"""

    def setup_method(self):
        self.rng = np.random.default_rng(42)

    def test_identical_series(self):
        r = self.rng.standard_normal(20) * 0.01
        panel = returns({"A": r, "B": r})
        assert monthly_avg_pairwise_correlation(panel, "2003-03") == pytest.approx(1.0, abs=1e-12)

    def test_negated_series(self):
        r = self.rng.standard_normal(20) * 0.01
        panel = returns({"A": r, "B": -r})
        assert monthly_avg_pairwise_correlation(panel, "2003-03") == pytest.approx(-1.0, abs=1e-12)

    def test_mean_of_three_pairs(self):
        data = self.rng.standard_normal((20, 3)) * 0.01
        panel = returns({"A": data[:, 0], "B": data[:, 1], "C": data[:, 2]})

        def pearson(a, b):
            a, b = a - a.mean(), b - b.mean()
            return float((a * b).sum() / np.sqrt((a * a).sum() * (b * b).sum()))

        expected = (
            pearson(data[:, 0], data[:, 1]) + pearson(data[:, 0], data[:, 2]) + pearson(data[:, 1], data[:, 2])
        ) / 3
        assert monthly_avg_pairwise_correlation(panel, "2003-03") == pytest.approx(expected, abs=1e-12)

    def test_equal_pairwise_correlation(self):
        panel = returns(equal_correlation_returns(0.35, n_series=4))
        assert monthly_avg_pairwise_correlation(panel, "2003-03") == pytest.approx(0.35, abs=1e-12)

    def test_short_overlap_excluded(self):
        a = self.rng.standard_normal(20) * 0.01
        b = a.copy()
        b[8:] = np.nan
        c = self.rng.standard_normal(20) * 0.01
        panel = returns({"A": a, "B": b, "C": c})
        block = panel.month_block(pd.Period("2003-03", "M"))
        mean, included, excluded = pairwise_correlation_stats(block, min_overlap=10)
        assert (included, excluded) == (1, 2)
        assert mean == pytest.approx(np.corrcoef(a, c)[0, 1], abs=1e-12)

    def test_flat_member_excluded(self):
        r = self.rng.standard_normal(20) * 0.01
        panel = returns({"A": r, "B": r * 2, "FLAT": np.zeros(20)})
        assert monthly_avg_pairwise_correlation(panel, "2003-03") == pytest.approx(1.0, abs=1e-12)

    def test_no_valid_pairs(self):
        panel = returns({"A": self.rng.standard_normal(5), "B": self.rng.standard_normal(5)})
        with pytest.raises(NoValidPairsError):
            monthly_avg_pairwise_correlation(panel, "2003-03", min_overlap=10)

    def test_exclude_world_index(self):
        r = self.rng.standard_normal(20) * 0.01
        panel = returns({"A": r, "B": r, "W": -r})
        assert monthly_avg_pairwise_correlation(panel, "2003-03", exclude=["W"]) == pytest.approx(1.0, abs=1e-12)

    def test_min_overlap_monotonicity(self):
        data = self.rng.standard_normal((22, 6)) * 0.01
        data[self.rng.random((22, 6)) < 0.35] = np.nan
        block = pd.DataFrame(data, index=pd.bdate_range("2003-03-03", periods=22))
        counts = [pairwise_correlation_stats(block, k)[1] for k in range(2, 23)]
        assert all(later <= earlier for earlier, later in zip(counts, counts[1:]))

    def test_series_bounds(self):
        panel = price_panel(8, end="2004-06-30")
        series = avg_correlation_series(daily_returns(panel), exclude=["MSCI_ACWI"])
        assert series.values.between(-1.0, 1.0).all()
        assert (series.support <= 6).all()
        assert series.metadata["excluded_series"] == "MSCI_ACWI"
