"""
Run configuration: one declarative key-value file per experiment plus flag overrides

Example ``run.conf``::

    EPU_PATH = data/epu_panel.csv
    PRICES_PATH = data/daily_prices.csv
    GDP_PATH = data/gdp.csv
    WINDOW_SIZES = 24,30,36,42,48
    MONTH_RANGE = 2003-01:2018-12
    SE_MODE = classical
"""
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.config.settings import settings
from src.utils.errors import ConfigError

PATH_KEYS = ("epu_path", "prices_path", "gdp_path")

_MONTH_RE = re.compile(r"^\d{4}-(0[1-9]|1[0-2])$")


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [part.strip() for part in re.split(r"[,:]", value) if part.strip()]
    return value


class RunConfig(BaseModel):
    """Inputs, conventions and output location for one pipeline run"""

    model_config = ConfigDict(extra="forbid")

    epu_path: Optional[Path] = None
    prices_path: Optional[Path] = None
    gdp_path: Optional[Path] = None
    world_index_id: str = settings.DEFAULT_WORLD_INDEX_ID
    window_sizes: List[int] = Field(default_factory=lambda: list(settings.DEFAULT_WINDOW_SIZES))
    month_range: Optional[Tuple[str, str]] = None
    min_overlap: int = settings.DEFAULT_MIN_OVERLAP
    min_volatility_obs: int = settings.MIN_VOLATILITY_OBS
    se_mode: str = "classical"
    hac_lags: Optional[int] = None
    return_mode: str = "simple"
    holiday_mode: str = "bridge"
    standardize_gepu: bool = False
    gdp_base_period: Optional[Tuple[str, str]] = None
    overlay_window: Optional[int] = None
    expected_economies: Optional[List[str]] = None
    output_dir: Path = Path("outputs")

    @field_validator("window_sizes", "month_range", "gdp_base_period", "expected_economies", mode="before")
    @classmethod
    def _split_lists(cls, value):
        return _split(value)

    @field_validator("epu_path", "prices_path", "gdp_path", "hac_lags", "overlay_window", mode="before")
    @classmethod
    def _blank_is_none(cls, value):
        if isinstance(value, str) and value.strip() == "":
            return None
        return value

    @property
    def effective_overlay_window(self) -> int:
        return self.overlay_window if self.overlay_window is not None else self.window_sizes[0]

    def echo(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


def load_run_config(path: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Read a key-value config file (keys case-insensitive) and apply overrides; overrides win"""
    values: Dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}", operation="load_run_config", location=str(path))
        for key, value in dotenv_values(path).items():
            values[key.strip().lower()] = value
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    try:
        return RunConfig(**values)
    except ValidationError as e:
        fields = sorted({".".join(str(p) for p in err["loc"]) for err in e.errors()})
        raise ConfigError(
            f"invalid configuration: {e.error_count()} error(s)",
            operation="load_run_config",
            location=", ".join(fields),
        )


def _month_pair_violations(name: str, pair: Optional[Sequence[str]]) -> List[str]:
    if pair is None:
        return []
    if len(pair) != 2 or not all(_MONTH_RE.match(p) for p in pair):
        return [f"{name} must be two YYYY-MM months, got {list(pair)}"]
    if pair[0] > pair[1]:
        return [f"{name} is reversed: {pair[0]} is after {pair[1]}"]
    return []


def validate_config(config: RunConfig, required: Sequence[str] = PATH_KEYS) -> List[str]:
    """Every violated constraint as a message; an empty list means the config is valid"""
    violations: List[str] = []

    if not config.window_sizes:
        violations.append("window_sizes must not be empty")
    elif any(t < 2 for t in config.window_sizes):
        violations.append(f"window_sizes entries must be ≥ 2 (got {config.window_sizes})")
    if len(set(config.window_sizes)) != len(config.window_sizes):
        violations.append("window_sizes entries must be distinct")
    if config.overlay_window is not None and config.overlay_window not in config.window_sizes:
        violations.append(f"overlay_window {config.overlay_window} is not one of window_sizes")

    violations += _month_pair_violations("month_range", config.month_range)
    violations += _month_pair_violations("gdp_base_period", config.gdp_base_period)

    if config.min_overlap < 2:
        violations.append(f"min_overlap must be ≥ 2 (got {config.min_overlap})")
    if config.min_volatility_obs < 2:
        violations.append(f"min_volatility_obs must be ≥ 2 (got {config.min_volatility_obs})")
    if config.se_mode not in ("classical", "hac"):
        violations.append(f"se_mode must be classical or hac (got {config.se_mode!r})")
    if config.hac_lags is not None and config.hac_lags < 0:
        violations.append(f"hac_lags must be ≥ 0 (got {config.hac_lags})")
    if config.return_mode not in ("simple", "log"):
        violations.append(f"return_mode must be simple or log (got {config.return_mode!r})")
    if config.holiday_mode not in ("bridge", "strict"):
        violations.append(f"holiday_mode must be bridge or strict (got {config.holiday_mode!r})")
    if not config.world_index_id:
        violations.append("world_index_id must not be empty")

    for key in required:
        path = getattr(config, key)
        if path is None:
            violations.append(f"{key} is not set")
        elif not Path(path).is_file():
            violations.append(f"{key}: file does not exist: {path}")

    return violations
