"""
Правильная раскраска рёбер: n_alpha(a) - сосед вершины alpha по ребру цвета a
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class Colouring:
    """
    neighbours[alpha][a - 1] - сосед вершины alpha по цвету a (с нуля)
    или None, если у вершины нет ребра этого цвета
    """

    neighbours: Tuple[Tuple[Optional[int], ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.neighbours)

    @property
    def colours(self) -> int:
        return len(self.neighbours[0]) if self.neighbours else 0

    def neighbour(self, vertex: int, colour: int) -> Optional[int]:
        return self.neighbours[vertex][colour - 1]

    def is_regular(self) -> bool:
        return all(n is not None for row in self.neighbours for n in row)


@dataclass(frozen=True, eq=False)
class ColourMatrices:
    matrices: List[np.ndarray]
    symmetric_involutive: bool
    commute: bool
