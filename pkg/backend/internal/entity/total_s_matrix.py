"""
Полная матрица рассеяния графа
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class TotalSMatrix:
    matrix: np.ndarray
    momentum: complex
    sigma_min: Optional[float] = None
    sigma_max: Optional[float] = None

    @property
    def condition_ratio(self) -> Optional[float]:
        """sigma_min / sigma_max матрицы E(p) - S22(p); None без внутренних рёбер"""
        if self.sigma_min is None or not self.sigma_max:
            return None
        return self.sigma_min / self.sigma_max
