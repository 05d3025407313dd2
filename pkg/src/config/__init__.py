"""
Configuration package initialization
"""
from .settings import settings, Settings
from .run_config import RunConfig, load_run_config, validate_config

__all__ = ["settings", "Settings", "RunConfig", "load_run_config", "validate_config"]
