"""
Метрический граф: разобранное описание из файла и проверенная неизменяемая модель
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple


@dataclass(frozen=True)
class EdgeSpec:
    """Внутреннее ребро в нумерации файла (вершины с единицы)"""

    u: int
    v: int
    length: float


@dataclass(frozen=True)
class LocalSpec:
    """Локальная матрица вершины: семейство по имени или явные элементы"""

    vertex: int
    family: Optional[str] = None
    matrix: Optional[Tuple[Tuple[complex, ...], ...]] = None


@dataclass(frozen=True)
class GraphSpec:
    vertices: int
    internal_edges: Tuple[EdgeSpec, ...] = ()
    external_edges: Tuple[int, ...] = ()
    lengths_unit: Optional[Fraction] = None
    locals: Tuple[LocalSpec, ...] = ()


@dataclass(frozen=True)
class InternalEdge:
    """
    Внутреннее ребро (вершины с нуля), для петли u == v.
    j - номер среди параллельных рёбер между u и v в порядке появления в описании
    """

    edge_id: int
    u: int
    v: int
    length: float
    j: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class ExternalEdge:
    ext_id: int
    vertex: int


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    internal_edges: Tuple[InternalEdge, ...]
    external_edges: Tuple[ExternalEdge, ...]
    lengths_unit: Optional[Fraction] = field(default=None, compare=False)

    def external_count(self) -> int:
        """N_e"""
        return len(self.external_edges)

    def internal_count(self) -> int:
        """N_i, петля считается один раз"""
        return len(self.internal_edges)

    def nu(self, vertex: int) -> int:
        """Число внутренних полурёбер в вершине, петля даёт два"""
        count = 0
        for edge in self.internal_edges:
            if edge.u == vertex:
                count += 1
            if edge.v == vertex:
                count += 1
        return count

    def external_at(self, vertex: int) -> int:
        return sum(1 for ext in self.external_edges if ext.vertex == vertex)

    def degree(self, vertex: int) -> int:
        """N_alpha: внешние плюс внутренние полурёбра"""
        return self.external_at(vertex) + self.nu(vertex)

    def multiplicity(self, a: int, b: int) -> int:
        pair = {a, b}
        return sum(1 for e in self.internal_edges if {e.u, e.v} == pair)

    def is_compact(self) -> bool:
        return not self.external_edges

    def min_length(self) -> Optional[float]:
        if not self.internal_edges:
            return None
        return min(e.length for e in self.internal_edges)

    def total_length(self) -> float:
        return sum(e.length for e in self.internal_edges)

    def vertices(self) -> range:
        return range(self.vertex_count)
