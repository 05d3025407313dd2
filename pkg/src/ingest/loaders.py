"""
CSV loaders for the three input datasets and month-range restriction

All files are UTF-8 CSV with a mandatory header row and ``.`` decimals.
Cells are read as text first so every error can name its row and column;
row numbers are 1-based file lines (the header is line 1).
"""
import math
import re
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.config.settings import settings
from src.ingest.models import (
    DailyPricePanel,
    EpuPanel,
    GdpWeightTable,
    as_month,
    month_key,
)
from src.utils import get_logger
from src.utils.errors import (
    EmptyYearError,
    GapError,
    MissingValueError,
    NonPositivePriceError,
    ParseError,
    RangeError,
    SchemaError,
    UnorderedDatesError,
)

logger = get_logger("ingest")

PathLike = Union[str, Path]

_MONTH_RE = re.compile(r"^\d{4}-(0[1-9]|1[0-2])$")
_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")
_YEAR_RE = re.compile(r"^\d{4}$")


def _cell(value) -> str:
    """Text of a raw cell; short rows yield NaN, which reads as blank"""
    if isinstance(value, float) and math.isnan(value):
        return ""
    return str(value).strip()


def _read_text_table(path: PathLike, operation: str) -> pd.DataFrame:
    """Data rows of a CSV file under its raw header row.

    The header is taken verbatim so repeated names survive, and blank lines
    stay in place so row ``i`` is file line ``i + 2``. Blank lines at the end
    of the file are dropped.
    """
    try:
        table = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            skipinitialspace=True,
            encoding="utf-8",
        )
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}", operation=operation, location=str(path))
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ParseError(f"unreadable CSV: {e}", operation=operation, location=str(path))
    if table.empty:
        raise ParseError("unreadable CSV: no header row", operation=operation, location=str(path))

    header = [_cell(c) for c in table.iloc[0]]
    rows = table.iloc[1:].reset_index(drop=True)
    keep = len(rows)
    while keep > 0 and all(_cell(c) == "" for c in rows.iloc[keep - 1]):
        keep -= 1
    rows = rows.iloc[:keep].copy()
    rows.columns = header
    return rows


def _parse_float(cell: str, operation: str, location: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"not a number: {cell!r}", operation=operation, location=location)
    if not math.isfinite(value):
        raise ParseError(f"non-finite value: {cell!r}", operation=operation, location=location)
    return value


def load_epu_panel(path: PathLike, expected_economies: Optional[Sequence[str]] = None) -> EpuPanel:
    """Load a validated monthly EPU panel from ``month,<code>,...`` CSV"""
    op = "load_epu_panel"
    raw = _read_text_table(path, op)
    columns = list(raw.columns)

    if not columns or columns[0] != "month":
        raise ParseError("first column header must be 'month'", operation=op, location=f"{path}:1")
    economies = columns[1:]
    if not economies:
        raise SchemaError("no economy columns", operation=op, location=f"{path}:1")
    if len(set(economies)) != len(economies):
        raise SchemaError("duplicate economy columns", operation=op, location=f"{path}:1")
    if expected_economies is not None and list(expected_economies) != economies:
        missing = sorted(set(expected_economies) - set(economies))
        extra = sorted(set(economies) - set(expected_economies))
        raise SchemaError(
            f"economy columns do not match expected list (missing={missing}, extra={extra})",
            operation=op,
            location=f"{path}:1",
        )
    if raw.empty:
        raise ParseError("no data rows", operation=op, location=str(path))

    months: List[pd.Period] = []
    values = np.empty((len(raw), len(economies)), dtype=float)
    for i, row in enumerate(raw.itertuples(index=False, name=None)):
        line = i + 2
        cell = _cell(row[0])
        if not _MONTH_RE.match(cell):
            raise ParseError(f"month must be YYYY-MM, got {cell!r}", operation=op, location=f"{path}:{line}:month")
        month = pd.Period(cell, freq="M")
        if months and month <= months[-1]:
            raise ParseError(
                f"months must be strictly increasing ({month_key(months[-1])} then {cell})",
                operation=op,
                location=f"{path}:{line}:month",
            )
        if months and month.ordinal != months[-1].ordinal + 1:
            gap = months[-1] + 1
            raise GapError(
                f"missing month {month_key(gap)}",
                operation=op,
                location=f"{path}:{line}:month",
            )
        months.append(month)

        for j, economy in enumerate(economies):
            location = f"{path}:{line}:{economy}"
            text = _cell(row[j + 1])
            if text == "":
                raise MissingValueError("empty EPU cell", operation=op, location=location)
            value = _parse_float(text, op, location)
            if value <= 0:
                raise ParseError(f"EPU value must be positive, got {text}", operation=op, location=location)
            values[i, j] = value

    frame = pd.DataFrame(values, index=pd.PeriodIndex(months, freq="M", name="month"), columns=economies)
    panel = EpuPanel(values=frame)
    logger.info(
        f"Loaded EPU panel {path}: {len(months)} months x {len(economies)} economies "
        f"({month_key(panel.first_month)}..{month_key(panel.last_month)})"
    )
    return panel


def write_epu_panel(panel: EpuPanel, path: PathLike) -> Path:
    """Write a panel in the canonical CSV format (exact float round-trip)"""
    path = Path(path)
    frame = panel.values.copy()
    frame.index = [month_key(m) for m in frame.index]
    frame.index.name = "month"
    frame.to_csv(path, float_format=settings.series_float_format(), lineterminator="\n")
    return path


def load_daily_prices(path: PathLike) -> DailyPricePanel:
    """Load daily closing prices from ``date,<id>,...`` CSV; blank cells are absent"""
    op = "load_daily_prices"
    raw = _read_text_table(path, op)
    columns = list(raw.columns)

    if not columns or columns[0] != "date":
        raise ParseError("first column header must be 'date'", operation=op, location=f"{path}:1")
    series = columns[1:]
    if not series:
        raise ParseError("no price columns", operation=op, location=f"{path}:1")
    if len(set(series)) != len(series):
        raise SchemaError("duplicate price columns", operation=op, location=f"{path}:1")

    dates: List[pd.Timestamp] = []
    prices = np.full((len(raw), len(series)), np.nan)
    for i, row in enumerate(raw.itertuples(index=False, name=None)):
        line = i + 2
        cell = _cell(row[0])
        if not _DATE_RE.match(cell):
            raise ParseError(f"date must be YYYY-MM-DD, got {cell!r}", operation=op, location=f"{path}:{line}:date")
        try:
            date = pd.Timestamp(cell)
        except ValueError:
            raise ParseError(f"invalid date {cell!r}", operation=op, location=f"{path}:{line}:date")
        if dates and date <= dates[-1]:
            raise UnorderedDatesError(
                f"dates must be strictly increasing ({dates[-1].date()} then {cell})",
                operation=op,
                location=f"{path}:{line}:date",
            )
        dates.append(date)

        for j, name in enumerate(series):
            text = _cell(row[j + 1])
            if text == "":
                continue
            location = f"{path}:{line}:{name}"
            value = _parse_float(text, op, location)
            if value <= 0:
                raise NonPositivePriceError(f"price must be positive, got {text}", operation=op, location=location)
            prices[i, j] = value

    frame = pd.DataFrame(prices, index=pd.DatetimeIndex(dates, name="date"), columns=series)
    panel = DailyPricePanel(prices=frame)
    logger.info(
        f"Loaded daily prices {path}: {len(dates)} dates x {len(series)} series, "
        f"{panel.absent_count()} absent cells"
    )
    return panel


def load_gdp_weights(path: PathLike) -> GdpWeightTable:
    """Load ``year,economy,gdp_value`` rows and convert them to per-year GDP shares"""
    op = "load_gdp_weights"
    raw = _read_text_table(path, op)
    columns = list(raw.columns)
    if columns != ["year", "economy", "gdp_value"]:
        raise ParseError(
            f"header must be year,economy,gdp_value, got {','.join(columns)}",
            operation=op,
            location=f"{path}:1",
        )

    records = {}
    for i, (year_text, economy, gdp_text) in enumerate(raw.itertuples(index=False, name=None)):
        line = i + 2
        year_text, economy, gdp_text = _cell(year_text), _cell(economy), _cell(gdp_text)
        if not _YEAR_RE.match(year_text):
            raise ParseError(f"year must be YYYY, got {year_text!r}", operation=op, location=f"{path}:{line}:year")
        if economy == "":
            raise ParseError("empty economy code", operation=op, location=f"{path}:{line}:economy")
        if gdp_text == "":
            raise ParseError("empty gdp_value", operation=op, location=f"{path}:{line}:gdp_value")
        value = _parse_float(gdp_text, op, f"{path}:{line}:gdp_value")
        if value < 0:
            raise ParseError(f"gdp_value must be >= 0, got {gdp_text}", operation=op, location=f"{path}:{line}:gdp_value")
        key = (int(year_text), economy)
        if key in records:
            raise ParseError(f"duplicate row for {key[0]} {economy}", operation=op, location=f"{path}:{line}")
        records[key] = value

    if not records:
        raise ParseError("no data rows", operation=op, location=str(path))

    series = pd.Series(records)
    series.index = series.index.set_names(["year", "economy"])
    table = series.unstack("economy").sort_index()

    totals = table.sum(axis=1, skipna=True)
    for year, total in totals.items():
        if not total > 0:
            raise EmptyYearError(f"GDP values for {year} sum to 0", operation=op, location=f"{path}:year={year}")

    weights = table.div(totals, axis=0)
    logger.info(f"Loaded GDP weights {path}: years {weights.index.min()}..{weights.index.max()}")
    return GdpWeightTable(weights=weights)


def restrict_months(panel: EpuPanel, first, last) -> EpuPanel:
    """Sub-panel covering ``first``..``last`` inclusive"""
    op = "restrict_months"
    first, last = as_month(first), as_month(last)
    if last < first:
        raise RangeError(
            f"last month {month_key(last)} precedes first month {month_key(first)}",
            operation=op,
        )
    if first < panel.first_month or last > panel.last_month:
        raise RangeError(
            f"range {month_key(first)}..{month_key(last)} outside panel "
            f"{month_key(panel.first_month)}..{month_key(panel.last_month)}",
            operation=op,
        )
    return EpuPanel(values=panel.values.loc[first:last].copy())
