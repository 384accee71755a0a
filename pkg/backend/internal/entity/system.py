"""
Граф вместе с локальными матрицами и нумерацией мод
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from backend.internal.entity.colouring import Colouring
from backend.internal.entity.graph import Graph
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.mode_index import ModeIndex


@dataclass(frozen=True, eq=False)
class ScatteringSystem:
    graph: Graph
    locals: Tuple[LocalScattering, ...]
    index: ModeIndex

    def all_constant(self) -> bool:
        return all(s.is_constant for s in self.locals)

    def all_unitary(self) -> bool:
        return all(s.unitary for s in self.locals)


@dataclass(frozen=True, eq=False)
class Fixture:
    """Именованный граф-образец; colouring есть только у платоновых тел"""

    name: str
    system: ScatteringSystem
    colouring: Optional[Colouring] = None


@dataclass(frozen=True, eq=False)
class TriangleStarPair:
    """Треугольник и звезда с тремя петлями с одинаковой полной матрицей"""

    triangle: ScatteringSystem
    star: ScatteringSystem
    permutation: np.ndarray
