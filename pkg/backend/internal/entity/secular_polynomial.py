"""
Секулярный многочлен det(E - S22) по переменной zeta = exp(-i p l) и найденные полюса
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from backend.internal.entity.system import ScatteringSystem


@dataclass(frozen=True, eq=False)
class SecularPolynomial:
    """coefficients[k] - коэффициент при zeta**k"""

    unit_length: float
    coefficients: np.ndarray
    degree_bound: int
    system: Optional[ScatteringSystem] = None

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, zeta):
        return P.polyval(zeta, self.coefficients)

    def normalized(self) -> np.ndarray:
        """Коэффициенты, делённые на старший"""
        return self.coefficients / self.coefficients[-1]


@dataclass(frozen=True)
class Pole:
    zeta: complex
    momentum: complex
    multiplicity: int
    coupled: bool = True
