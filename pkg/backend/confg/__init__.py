"""
Пакет конфигурации приложения
"""

from backend.confg.config import (
    AppConfig,
    CliConfig,
    LocalConfig,
    LoggingConfig,
    SolverConfig,
    SpectralConfig,
    config,
)

__all__ = [
    "AppConfig",
    "CliConfig",
    "LocalConfig",
    "LoggingConfig",
    "SolverConfig",
    "SpectralConfig",
    "config",
]
