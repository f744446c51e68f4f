"""Configuration module for dynisched."""

from .loader import DEFAULT_CONFIG_FILES, ConfigError, ConfigLoader, load_settings
from .settings import (
    BenchSettings,
    EngineSettings,
    LoggingSettings,
    ReductionSettings,
    Settings,
    WorkloadSettings,
)

__all__ = [
    "DEFAULT_CONFIG_FILES",
    "BenchSettings",
    "ConfigError",
    "ConfigLoader",
    "EngineSettings",
    "LoggingSettings",
    "ReductionSettings",
    "Settings",
    "WorkloadSettings",
    "load_settings",
]
