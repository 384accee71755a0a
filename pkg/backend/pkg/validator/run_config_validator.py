"""
Валидатор параметров запуска командной строки
"""

import math
from typing import Optional, Sequence, Tuple

OUTPUT_FORMATS = ("json", "csv")


class RunConfigValidator:
    @staticmethod
    def validate_grid(
        p_min: Optional[float],
        p_max: Optional[float],
        steps: Optional[int],
        p_list: Optional[Sequence[float]],
    ) -> Tuple[bool, str]:
        if p_list:
            if not all(math.isfinite(p) for p in p_list):
                return False, "Список импульсов содержит нечисловые значения"
            return True, ""

        if p_min is None or p_max is None:
            return False, "Нужно задать --p-min и --p-max или --p-list"
        if steps is None or steps < 1:
            return False, "Число шагов --steps должно быть не меньше 1"
        if not p_min < p_max:
            return False, f"Требуется p_min < p_max, получено {p_min} >= {p_max}"
        return True, ""

    @staticmethod
    def validate_tolerance(tol: float) -> Tuple[bool, str]:
        if not tol > 0:
            return False, f"Допуск должен быть положительным, получено {tol}"
        return True, ""

    @staticmethod
    def validate_workers(workers: int) -> Tuple[bool, str]:
        if workers < 1:
            return False, "Число потоков --workers должно быть не меньше 1"
        return True, ""

    @staticmethod
    def validate_format(output_format: str) -> Tuple[bool, str]:
        if output_format not in OUTPUT_FORMATS:
            return False, f"Неизвестный формат вывода '{output_format}'"
        return True, ""
