"""
Econometrics package initialization
"""
from .models import AlignedSample, RegressionResult, Table1Row, Table2, Table2Cell, table1_frame
from .regression import align, ols, newey_west_lags
from .tables import (
    pearson_correlation,
    rescale_to_match,
    run_table1,
    run_table2,
    overlay_frame,
)

__all__ = [
    "AlignedSample",
    "RegressionResult",
    "Table1Row",
    "Table2",
    "Table2Cell",
    "table1_frame",
    "align",
    "ols",
    "newey_west_lags",
    "pearson_correlation",
    "rescale_to_match",
    "run_table1",
    "run_table2",
    "overlay_frame",
]
