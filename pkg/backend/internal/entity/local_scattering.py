"""
Локальная матрица рассеяния вершины S_alpha(p)
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

MatrixEvaluator = Callable[[complex], np.ndarray]


@dataclass(frozen=True, eq=False)
class LocalScattering:
    """
    Строки и столбцы идут в порядке ModeIndex.local_keys(vertex).
    Задаётся либо постоянной матрицей matrix, либо чистой функцией evaluator
    """

    vertex: int
    size: int
    matrix: Optional[np.ndarray] = None
    evaluator: Optional[MatrixEvaluator] = None
    family: Optional[str] = None
    unitary: bool = False

    @property
    def is_constant(self) -> bool:
        return self.matrix is not None

    def at(self, p: complex) -> np.ndarray:
        """Значение S_alpha(p)"""
        if self.matrix is not None:
            return self.matrix
        return np.asarray(self.evaluator(complex(p)), dtype=complex)
