"""
Параметры одного запуска командной строки
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from backend.internal.entity.errors import RunConfigError
from backend.pkg.validator.run_config_validator import RunConfigValidator


def parse_float_list(text: Optional[str]) -> Optional[Tuple[float, ...]]:
    """'0.5,1,2.25' -> (0.5, 1.0, 2.25)"""
    if text is None or not text.strip():
        return None
    try:
        return tuple(float(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise RunConfigError(f"Не удалось разобрать список чисел '{text}'")


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph: Optional[str] = None
    graph_b: Optional[str] = None
    p_min: Optional[float] = None
    p_max: Optional[float] = None
    steps: Optional[int] = None
    p_list: Optional[Tuple[float, ...]] = None
    p_imag: float = 0.0
    unit: Optional[float] = None
    out: Optional[str] = None
    output_format: str = "json"
    tol: float = 1e-8
    workers: int = 1

    def validate(self, needs_grid: bool = True) -> None:
        """Проверить параметры; при ошибке RunConfigError (код выхода 2)"""
        checks = [
            RunConfigValidator.validate_format(self.output_format),
            RunConfigValidator.validate_tolerance(self.tol),
            RunConfigValidator.validate_workers(self.workers),
        ]
        if needs_grid:
            checks.append(
                RunConfigValidator.validate_grid(self.p_min, self.p_max, self.steps, self.p_list)
            )
        if self.unit is not None and not self.unit > 0:
            checks.append((False, f"Единица длины --unit должна быть положительной: {self.unit}"))

        for is_valid, error_msg in checks:
            if not is_valid:
                raise RunConfigError(error_msg)

    def interval(self) -> Tuple[float, float]:
        is_valid, error_msg = RunConfigValidator.validate_grid(self.p_min, self.p_max, 1, None)
        if not is_valid:
            raise RunConfigError(error_msg)
        return float(self.p_min), float(self.p_max)

    def momenta(self) -> List[complex]:
        """Точки сетки в порядке вывода"""
        if self.p_list:
            values = np.asarray(self.p_list, dtype=float)
        else:
            values = np.linspace(self.p_min, self.p_max, self.steps)
        return [complex(float(p), self.p_imag) for p in values]
