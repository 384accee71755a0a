"""
Блоки глобальной матрицы рассеяния и матрица распространения E(p)
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BlockSystem:
    s11: np.ndarray
    s12: np.ndarray
    s21: np.ndarray
    s22: np.ndarray
    momentum: complex

    def full(self) -> np.ndarray:
        """[[s11, s12], [s21, s22]] в порядке (A; B)"""
        return np.block([[self.s11, self.s12], [self.s21, self.s22]])


@dataclass(frozen=True, eq=False)
class PropagationMatrix:
    matrix: np.ndarray
    momentum: complex
