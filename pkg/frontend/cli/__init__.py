"""
Командная строка: расчёт S_tot, полюсов, спектра и проверки свойств
"""

from frontend.cli.commands import cli
from frontend.cli.run_config import RunConfig

__all__ = ["RunConfig", "cli"]
