"""
Валидатор описания метрического графа
"""

import math
from typing import Tuple

import networkx as nx

from backend.internal.entity.graph import GraphSpec


class GraphSpecValidator:
    @staticmethod
    def validate_vertex_references(spec: GraphSpec) -> Tuple[bool, str]:
        if spec.vertices < 1:
            return False, "Граф должен содержать хотя бы одну вершину"

        for k, edge in enumerate(spec.internal_edges):
            for end in (edge.u, edge.v):
                if not 1 <= end <= spec.vertices:
                    return (
                        False,
                        f"Внутреннее ребро №{k + 1} ссылается на вершину {end}, "
                        f"допустимы 1..{spec.vertices}",
                    )

        for k, vertex in enumerate(spec.external_edges):
            if not 1 <= vertex <= spec.vertices:
                return (
                    False,
                    f"Внешнее ребро №{k + 1} ссылается на вершину {vertex}, "
                    f"допустимы 1..{spec.vertices}",
                )

        for local in spec.locals:
            if not 1 <= local.vertex <= spec.vertices:
                return False, f"Локальная матрица задана для вершины {local.vertex}"

        return True, ""

    @staticmethod
    def validate_lengths(spec: GraphSpec) -> Tuple[bool, str]:
        for k, edge in enumerate(spec.internal_edges):
            if not (edge.length > 0 and math.isfinite(edge.length)):
                return (
                    False,
                    f"Длина внутреннего ребра №{k + 1} ({edge.u}-{edge.v}) "
                    f"должна быть положительной и конечной, получено {edge.length}",
                )
        return True, ""

    @staticmethod
    def validate_connectivity(spec: GraphSpec) -> Tuple[bool, str]:
        adjacency = nx.MultiGraph()
        adjacency.add_nodes_from(range(1, spec.vertices + 1))
        adjacency.add_edges_from((e.u, e.v) for e in spec.internal_edges)
        if not nx.is_connected(adjacency):
            parts = nx.number_connected_components(adjacency)
            return False, f"Граф несвязен: {parts} компонент связности"
        return True, ""
