"""
Use case для построения метрического графа и нумерации мод
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from backend.internal.entity.errors import (
    DanglingVertexReferenceError,
    DisconnectedGraphError,
    NonPositiveLengthError,
    SizeMismatchError,
)
from backend.internal.entity.graph import ExternalEdge, Graph, GraphSpec, InternalEdge
from backend.internal.entity.mode_index import HalfEdge, ModeIndex, SlotKey
from backend.pkg.logger import get_logger
from backend.pkg.validator.graph_spec_validator import GraphSpecValidator

logger = get_logger(__name__)


class GraphUseCase:
    def build_graph(self, spec: GraphSpec) -> Graph:
        """Проверить описание и построить неизменяемый граф"""
        is_valid, error_msg = GraphSpecValidator.validate_vertex_references(spec)
        if not is_valid:
            raise DanglingVertexReferenceError(error_msg)

        is_valid, error_msg = GraphSpecValidator.validate_lengths(spec)
        if not is_valid:
            raise NonPositiveLengthError(error_msg)

        is_valid, error_msg = GraphSpecValidator.validate_connectivity(spec)
        if not is_valid:
            raise DisconnectedGraphError(error_msg)

        seen: Dict[frozenset, int] = {}
        internal = []
        for edge_id, edge in enumerate(spec.internal_edges):
            pair = frozenset((edge.u, edge.v))
            seen[pair] = seen.get(pair, 0) + 1
            internal.append(
                InternalEdge(
                    edge_id=edge_id,
                    u=edge.u - 1,
                    v=edge.v - 1,
                    length=float(edge.length),
                    j=seen[pair],
                )
            )

        external = tuple(
            ExternalEdge(ext_id=ext_id, vertex=vertex - 1)
            for ext_id, vertex in enumerate(spec.external_edges)
        )

        graph = Graph(
            vertex_count=spec.vertices,
            internal_edges=tuple(internal),
            external_edges=external,
            lengths_unit=spec.lengths_unit,
        )
        logger.debug(
            "Граф построен: N=%d, N_e=%d, N_i=%d",
            graph.vertex_count,
            graph.external_count(),
            graph.internal_count(),
        )
        return graph

    def mode_index(self, graph: Graph) -> ModeIndex:
        """
        Внутренние слоты упорядочены лексикографически по (tail, head, j, half),
        внешние по ext_id. В каждой вершине сначала внешние слоты, затем
        внутренние в глобальном порядке
        """
        halves: List[HalfEdge] = []
        for edge in graph.internal_edges:
            if edge.is_loop:
                for side in (0, 1):
                    halves.append(
                        HalfEdge(
                            key=SlotKey("int", edge.edge_id, side),
                            tail=edge.u,
                            head=edge.u,
                            j=edge.j,
                            half=side,
                            length=edge.length,
                        )
                    )
                continue
            halves.append(
                HalfEdge(SlotKey("int", edge.edge_id, 0), edge.u, edge.v, edge.j, 0, edge.length)
            )
            halves.append(
                HalfEdge(SlotKey("int", edge.edge_id, 1), edge.v, edge.u, edge.j, 0, edge.length)
            )
        halves.sort(key=HalfEdge.order)

        externals = sorted(graph.external_edges, key=lambda e: e.ext_id)
        external_keys = tuple(SlotKey("ext", e.ext_id) for e in externals)

        orderings = []
        for vertex in graph.vertices():
            keys = [SlotKey("ext", e.ext_id) for e in externals if e.vertex == vertex]
            keys.extend(h.key for h in halves if h.tail == vertex)
            orderings.append(tuple(keys))

        return ModeIndex(
            external_keys=external_keys,
            half_edges=tuple(halves),
            local_orderings=tuple(orderings),
        )

    @staticmethod
    def _permutation_matrix(perm: Sequence[int], size: int, space: str) -> np.ndarray:
        if len(perm) != size:
            raise SizeMismatchError(
                f"Перестановка {space} слотов имеет длину {len(perm)}, ожидалось {size}"
            )
        if sorted(perm) != list(range(size)):
            raise SizeMismatchError(f"Последовательность {list(perm)} не является перестановкой")
        matrix = np.zeros((size, size))
        for source, target in enumerate(perm):
            matrix[target, source] = 1.0
        return matrix

    def external_permutation(self, graph: Graph, perm: Sequence[int]) -> np.ndarray:
        """Матрица P с P e_i = e_perm[i] на пространстве внешних слотов"""
        return self._permutation_matrix(perm, graph.external_count(), "внешних")

    def internal_permutation(self, graph: Graph, perm: Sequence[int]) -> np.ndarray:
        """Матрица P с P e_i = e_perm[i] на пространстве внутренних слотов"""
        return self._permutation_matrix(perm, 2 * graph.internal_count(), "внутренних")

    def relabel(
        self,
        graph: Graph,
        vertex_perm: Sequence[int],
        external_perm: Optional[Sequence[int]] = None,
    ) -> Graph:
        """
        Перенумеровать вершины (alpha -> vertex_perm[alpha]) и, при необходимости,
        внешние рёбра (ext_id -> external_perm[ext_id]). Номера внутренних рёбер
        сохраняются
        """
        if sorted(vertex_perm) != list(graph.vertices()):
            raise SizeMismatchError("Перестановка вершин задана неверно")
        if external_perm is None:
            external_perm = list(range(graph.external_count()))
        if sorted(external_perm) != list(range(graph.external_count())):
            raise SizeMismatchError("Перестановка внешних рёбер задана неверно")

        internal = tuple(
            InternalEdge(
                edge_id=e.edge_id,
                u=vertex_perm[e.u],
                v=vertex_perm[e.v],
                length=e.length,
                j=e.j,
            )
            for e in graph.internal_edges
        )
        external = tuple(
            sorted(
                (
                    ExternalEdge(ext_id=external_perm[e.ext_id], vertex=vertex_perm[e.vertex])
                    for e in graph.external_edges
                ),
                key=lambda e: e.ext_id,
            )
        )
        return Graph(
            vertex_count=graph.vertex_count,
            internal_edges=internal,
            external_edges=external,
            lengths_unit=graph.lengths_unit,
        )

    def induced_external_permutation(
        self,
        old_index: ModeIndex,
        new_index: ModeIndex,
        external_perm: Optional[Sequence[int]] = None,
    ) -> List[int]:
        """Старый внешний слот -> новый внешний слот"""
        result = []
        for key in old_index.external_keys:
            ident = key.ident if external_perm is None else external_perm[key.ident]
            result.append(new_index.slot_of(SlotKey("ext", ident)))
        return result

    def induced_internal_permutation(
        self, old_index: ModeIndex, new_index: ModeIndex
    ) -> List[int]:
        """Старый внутренний слот -> новый по ключу (edge_id, side)"""
        return [new_index.slot_of(h.key) for h in old_index.half_edges]
