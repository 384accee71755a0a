"""
Use case для построения графов-образцов: платоновы тела с раскраской рёбер,
пара треугольник / звезда с петлями, простые канонические графы
"""

import math
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from backend.internal.entity.colouring import Colouring, ColourMatrices
from backend.internal.entity.errors import (
    NonRegularColouringError,
    RunConfigError,
    ShapeMismatchError,
    UnknownFixtureError,
    UnknownSolidError,
    UnserializableLocalError,
)
from backend.internal.entity.graph import EdgeSpec, Graph, GraphSpec, LocalSpec
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.system import Fixture, ScatteringSystem, TriangleStarPair
from backend.internal.usecase.graph_usecase import GraphUseCase
from backend.internal.usecase.local_scattering_usecase import LocalScatteringUseCase
from backend.pkg.logger import get_logger
from backend.pkg.validator.colouring_validator import ColouringValidator

logger = get_logger(__name__)

# Рёбра по цветам, вершины с единицы: цвет a - совершенное паросочетание
TETRAHEDRON_COLOURS = (
    ((1, 4), (2, 3)),
    ((1, 2), (3, 4)),
    ((1, 3), (2, 4)),
)
CUBE_COLOURS = (
    ((1, 2), (3, 4), (5, 6), (7, 8)),
    ((1, 4), (2, 3), (5, 8), (6, 7)),
    ((1, 5), (2, 6), (3, 7), (4, 8)),
)
NETWORKX_SOLIDS: Dict[str, Callable[[], nx.Graph]] = {
    "octahedron": nx.octahedral_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "icosahedron": nx.icosahedral_graph,
}
SOLIDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")
CANONICAL = ("line2", "interval_compact", "tadpole", "fabry_perot", "star")
PAIR_FIXTURES = ("triangle", "star_loops")

COLOURING_BUDGET = 1_000_000

LocalMatrix = Union[np.ndarray, LocalScattering]


def _unit(length: float) -> Fraction:
    return Fraction(repr(float(length)))


class _BudgetExhausted(Exception):
    pass


class GeneratorsUseCase:
    def __init__(self, graph_usecase: GraphUseCase, local_usecase: LocalScatteringUseCase):
        self.graph_usecase = graph_usecase
        self.local_usecase = local_usecase

    def build_system(self, spec: GraphSpec) -> ScatteringSystem:
        """Граф, нумерация мод и локальные матрицы по описанию"""
        graph = self.graph_usecase.build_graph(spec)
        index = self.graph_usecase.mode_index(graph)
        locals_ = self.local_usecase.locals_from_spec(graph, index, spec.locals)
        return ScatteringSystem(graph=graph, locals=tuple(locals_), index=index)

    def system_from_graph(
        self, graph: Graph, locals_: Sequence[LocalScattering]
    ) -> ScatteringSystem:
        index = self.graph_usecase.mode_index(graph)
        return ScatteringSystem(graph=graph, locals=tuple(locals_), index=index)

    # Платоновы тела

    def _colour_edges(self, solid: nx.Graph, colours: int) -> Optional[Dict[Tuple[int, int], int]]:
        """
        Перебор с возвратом: первым красится ребро с наименьшим числом
        свободных цветов. None, если бюджет шагов исчерпан
        """
        edges = [tuple(sorted(e)) for e in solid.edges()]
        nx.set_edge_attributes(solid, values=None, name="colour")
        steps = [0]

        def free(edge) -> List[int]:
            used = {
                solid.edges[e]["colour"]
                for end in edge
                for e in solid.edges(end)
                if solid.edges[e]["colour"] is not None
            }
            return [c for c in range(1, colours + 1) if c not in used]

        def search() -> bool:
            steps[0] += 1
            if steps[0] > COLOURING_BUDGET:
                raise _BudgetExhausted()
            pending = [e for e in edges if solid.edges[e]["colour"] is None]
            if not pending:
                return True
            edge = min(pending, key=lambda e: len(free(e)))
            for colour in free(edge):
                solid.edges[edge]["colour"] = colour
                if search():
                    return True
                solid.edges[edge]["colour"] = None
            return False

        try:
            if not search():
                return None
        except _BudgetExhausted:
            logger.warning("Раскраска рёбер не найдена за %d шагов", COLOURING_BUDGET)
            return None
        return {e: solid.edges[e]["colour"] for e in edges}

    @staticmethod
    def _colouring_from_edges(
        vertex_count: int, colours: int, coloured: Dict[Tuple[int, int], int]
    ) -> Colouring:
        table: List[List[Optional[int]]] = [[None] * colours for _ in range(vertex_count)]
        for (u, v), colour in coloured.items():
            table[u][colour - 1] = v
            table[v][colour - 1] = u
        return Colouring(neighbours=tuple(tuple(row) for row in table))

    def platonic(self, name: str, edge_length: float = 1.0) -> Tuple[Graph, Optional[Colouring]]:
        """Платоново тело с одним внешним ребром в каждой вершине"""
        if edge_length <= 0:
            raise RunConfigError(f"Длина ребра должна быть положительной, получено {edge_length}")

        if name in ("tetrahedron", "cube"):
            table = TETRAHEDRON_COLOURS if name == "tetrahedron" else CUBE_COLOURS
            vertex_count = 4 if name == "tetrahedron" else 8
            edges = [pair for matching in table for pair in matching]
            coloured = {
                (u - 1, v - 1): colour
                for colour, matching in enumerate(table, start=1)
                for u, v in matching
            }
            colours = len(table)
        elif name in NETWORKX_SOLIDS:
            solid = NETWORKX_SOLIDS[name]()
            vertex_count = solid.number_of_nodes()
            edges = sorted((min(u, v) + 1, max(u, v) + 1) for u, v in solid.edges())
            colours = max(d for _, d in solid.degree())
            coloured = self._colour_edges(solid, colours)
        else:
            raise UnknownSolidError(f"Неизвестное платоново тело '{name}'")

        spec = GraphSpec(
            vertices=vertex_count,
            internal_edges=tuple(EdgeSpec(u, v, float(edge_length)) for u, v in edges),
            external_edges=tuple(range(1, vertex_count + 1)),
            lengths_unit=_unit(edge_length),
        )
        graph = self.graph_usecase.build_graph(spec)
        if coloured is None:
            return graph, None

        colouring = self._colouring_from_edges(vertex_count, colours, coloured)
        is_valid, error_msg = ColouringValidator.validate(colouring)
        if not is_valid:
            raise NonRegularColouringError(error_msg)
        return graph, colouring

    def commuting_colour_matrices(self, colouring: Colouring) -> ColourMatrices:
        """Матрицы E_a = sum_alpha E_{alpha, n_alpha(a)} и проверка их коммутации"""
        is_valid, error_msg = ColouringValidator.validate_regular(colouring)
        if not is_valid:
            raise NonRegularColouringError(error_msg)
        is_valid, error_msg = ColouringValidator.validate(colouring)
        if not is_valid:
            raise NonRegularColouringError(error_msg)

        n = colouring.vertex_count
        matrices = []
        for colour in range(1, colouring.colours + 1):
            matrix = np.zeros((n, n))
            for alpha in range(n):
                matrix[alpha, colouring.neighbour(alpha, colour)] = 1.0
            matrices.append(matrix)

        identity = np.eye(n)
        symmetric_involutive = all(
            np.array_equal(m, m.T) and np.array_equal(m @ m, identity) for m in matrices
        )
        commute = all(
            np.array_equal(a @ b, b @ a) for a, b in combinations(matrices, 2)
        )
        return ColourMatrices(
            matrices=matrices, symmetric_involutive=symmetric_involutive, commute=commute
        )

    def uniform_locals(
        self, graph: Graph, factory: Callable[[int, int], LocalScattering]
    ) -> List[LocalScattering]:
        """factory(vertex, degree) для каждой вершины"""
        return [factory(v, graph.degree(v)) for v in graph.vertices()]

    def coloured_locals(
        self, graph: Graph, colouring: Colouring, local: LocalMatrix
    ) -> List[LocalScattering]:
        """
        Одна и та же матрица во всех вершинах, заданная в порядке цветов
        (0 - внешний слот, a - ребро цвета a); переставляется в порядок слотов вершины
        """
        if isinstance(local, LocalScattering):
            matrix, family = local.matrix, local.family
        else:
            matrix, family = np.asarray(local, dtype=complex), None
        if matrix.shape != (colouring.colours + 1, colouring.colours + 1):
            raise ShapeMismatchError(
                f"Ожидалась матрица {colouring.colours + 1}x{colouring.colours + 1}, "
                f"получено {matrix.shape}"
            )

        index = self.graph_usecase.mode_index(graph)
        heads = {h.key: h.head for h in index.half_edges}
        result = []
        for vertex in graph.vertices():
            if graph.external_at(vertex) != 1:
                raise ShapeMismatchError(
                    f"Вершина {vertex + 1} должна иметь ровно одно внешнее ребро"
                )
            colour_of = {
                colouring.neighbour(vertex, a): a for a in range(1, colouring.colours + 1)
            }
            order = [0] + [colour_of[heads[k]] for k in index.local_keys(vertex)[1:]]
            reordered = matrix[np.ix_(order, order)]
            same = np.array_equal(reordered, matrix)
            result.append(
                self.local_usecase.constant_local(
                    vertex, reordered, family=family if same else None
                )
            )
        return result

    def platonic_fixture(
        self, name: str, edge_length: float = 1.0, local: str = "kirchhoff"
    ) -> Fixture:
        """Платоново тело с одинаковыми масштабно-инвариантными матрицами во всех вершинах"""
        graph, colouring = self.platonic(name, edge_length)
        locals_ = self.uniform_locals(
            graph, lambda v, n: self.local_usecase.from_family(v, local, n)
        )
        return Fixture(name=name, system=self.system_from_graph(graph, locals_), colouring=colouring)

    # Треугольник и звезда с петлями

    def triangle_and_star_pair(
        self,
        d12: float,
        d13: float,
        d23: float,
        triangle_locals: Sequence[LocalMatrix],
    ) -> TriangleStarPair:
        """
        Слоты звезды помечены парами (вершина, сосед) треугольника:
        внешние (1,0), (2,0), (3,0); петля 1 = (1,2), (2,1) длины d12;
        петля 2 = (2,3), (3,2) длины d23; петля 3 = (1,3), (3,1) длины d13
        """
        if len(triangle_locals) != 3:
            raise ShapeMismatchError("Нужны три локальные матрицы треугольника")
        matrices = [
            local.matrix if isinstance(local, LocalScattering) else np.asarray(local, complex)
            for local in triangle_locals
        ]

        triangle_spec = GraphSpec(
            vertices=3,
            internal_edges=(EdgeSpec(1, 2, d12), EdgeSpec(1, 3, d13), EdgeSpec(2, 3, d23)),
            external_edges=(1, 2, 3),
        )
        triangle_graph = self.graph_usecase.build_graph(triangle_spec)
        triangle_index = self.graph_usecase.mode_index(triangle_graph)
        triangle_locals_ = [
            self.local_usecase.constant_local(v, matrices[v], size=3) for v in range(3)
        ]
        triangle = ScatteringSystem(triangle_graph, tuple(triangle_locals_), triangle_index)

        star_spec = GraphSpec(
            vertices=1,
            internal_edges=(EdgeSpec(1, 1, d12), EdgeSpec(1, 1, d23), EdgeSpec(1, 1, d13)),
            external_edges=(1, 1, 1),
        )
        star_graph = self.graph_usecase.build_graph(star_spec)
        star_index = self.graph_usecase.mode_index(star_graph)

        labels = [(1, 0), (2, 0), (3, 0), (1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)]

        def position(label: Tuple[int, int]) -> int:
            vertex, neighbour = label
            if neighbour == 0:
                return 0
            others = sorted({1, 2, 3} - {vertex})
            return 1 + others.index(neighbour)

        t = np.zeros((9, 9), dtype=complex)
        for i, row in enumerate(labels):
            for j, col in enumerate(labels):
                if row[0] == col[0]:
                    t[i, j] = matrices[row[0] - 1][position(row), position(col)]
        star_local = self.local_usecase.constant_local(0, t, size=9)
        star = ScatteringSystem(star_graph, (star_local,), star_index)

        triangle_internal = [(h.tail + 1, h.head + 1) for h in triangle_index.half_edges]
        star_internal = labels[3:]
        permutation = np.zeros((6, 6))
        for row, label in enumerate(star_internal):
            permutation[row, triangle_internal.index(label)] = 1.0
        return TriangleStarPair(triangle=triangle, star=star, permutation=permutation)

    # Канонические графы

    def canonical(self, name: str, **params) -> Fixture:
        """
        line2(d), interval_compact(length, r1, r2), tadpole(d), fabry_perot(r, d), star(n)
        """
        if name == "line2":
            d = float(params.get("d", 1.0))
            spec = GraphSpec(
                vertices=2,
                internal_edges=(EdgeSpec(1, 2, d),),
                external_edges=(1, 2),
                lengths_unit=_unit(d),
            )
            swap = np.array([[0.0, 1.0], [1.0, 0.0]])
            graph = self.graph_usecase.build_graph(spec)
            locals_ = [self.local_usecase.constant_local(v, swap) for v in range(2)]
        elif name == "interval_compact":
            length = float(params.get("length", 1.0))
            reflections = (float(params.get("r1", -1.0)), float(params.get("r2", -1.0)))
            spec = GraphSpec(
                vertices=2,
                internal_edges=(EdgeSpec(1, 2, length),),
                lengths_unit=_unit(length),
            )
            graph = self.graph_usecase.build_graph(spec)
            locals_ = [
                self.local_usecase.dirichlet_local(v, 1)
                if r == -1.0
                else self.local_usecase.constant_local(v, [[r]])
                for v, r in enumerate(reflections)
            ]
        elif name == "tadpole":
            d = float(params.get("d", 1.0))
            spec = GraphSpec(
                vertices=1,
                internal_edges=(EdgeSpec(1, 1, d),),
                external_edges=(1,),
                lengths_unit=_unit(d),
            )
            graph = self.graph_usecase.build_graph(spec)
            locals_ = [self.local_usecase.kirchhoff_local(0, 3)]
        elif name == "fabry_perot":
            r = float(params.get("r", 0.6))
            d = float(params.get("d", 1.0))
            if not -1.0 <= r <= 1.0:
                raise RunConfigError(f"Коэффициент отражения должен лежать в [-1, 1], получено {r}")
            t = math.sqrt(1.0 - r * r)
            spec = GraphSpec(
                vertices=2,
                internal_edges=(EdgeSpec(1, 2, d),),
                external_edges=(1, 2),
                lengths_unit=_unit(d),
            )
            graph = self.graph_usecase.build_graph(spec)
            mirror = np.array([[r, t], [t, -r]])
            locals_ = [self.local_usecase.constant_local(v, mirror) for v in range(2)]
        elif name == "star":
            n = int(params.get("n", 3))
            if n < 1:
                raise RunConfigError("Звезда должна иметь хотя бы одно внешнее ребро")
            spec = GraphSpec(vertices=1, external_edges=tuple([1] * n))
            graph = self.graph_usecase.build_graph(spec)
            locals_ = [self.local_usecase.kirchhoff_local(0, n)]
        else:
            raise UnknownFixtureError(f"Неизвестный граф-образец '{name}'")
        return Fixture(name=name, system=self.system_from_graph(graph, locals_))

    def fixture_names(self) -> List[str]:
        return list(SOLIDS) + list(CANONICAL) + list(PAIR_FIXTURES)

    def generate(self, name: str, **params) -> Fixture:
        """Любой именованный граф-образец"""
        if name in SOLIDS:
            return self.platonic_fixture(
                name, float(params.get("d", 1.0)), params.get("local") or "kirchhoff"
            )
        if name in PAIR_FIXTURES:
            d12, d13, d23 = params.get("lengths") or (1.0, 1.0, 1.0)
            kirchhoff = self.local_usecase.kirchhoff_local(0, 3).matrix
            pair = self.triangle_and_star_pair(d12, d13, d23, [kirchhoff] * 3)
            system = pair.triangle if name == "triangle" else pair.star
            return Fixture(name=name, system=system)
        return self.canonical(name, **params)

    def to_graph_spec(self, system: ScatteringSystem) -> GraphSpec:
        """Описание графа для записи в файл"""
        graph = system.graph
        local_specs = []
        for local in system.locals:
            if not local.is_constant:
                raise UnserializableLocalError(
                    f"Матрица вершины {local.vertex + 1} задана функцией и не может быть записана"
                )
            if local.family is not None:
                local_specs.append(LocalSpec(vertex=local.vertex + 1, family=local.family))
            else:
                rows = tuple(tuple(complex(x) for x in row) for row in local.matrix)
                local_specs.append(LocalSpec(vertex=local.vertex + 1, matrix=rows))
        return GraphSpec(
            vertices=graph.vertex_count,
            internal_edges=tuple(
                EdgeSpec(e.u + 1, e.v + 1, e.length) for e in graph.internal_edges
            ),
            external_edges=tuple(
                e.vertex + 1 for e in sorted(graph.external_edges, key=lambda e: e.ext_id)
            ),
            lengths_unit=graph.lengths_unit,
            locals=tuple(local_specs),
        )

    # Случайные графы для проверки свойств

    def _random_involution(self, rng: np.random.Generator, n: int, unitary: bool) -> np.ndarray:
        signs = np.diag(rng.choice([-1.0, 1.0], size=n))
        if unitary:
            q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
            q = q * (np.diag(r) / np.abs(np.diag(r)))
            return q @ signs @ q.conj().T
        v = np.eye(n) + 0.3 * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
        return v @ signs @ np.linalg.inv(v)

    def random_fixture(
        self,
        rng: np.random.Generator,
        max_vertices: int = 6,
        max_internal: int = 8,
        unitary: bool = True,
        loops: bool = True,
    ) -> Fixture:
        """Связный граф: остовное дерево, лишние рёбра и петли, хотя бы одно внешнее ребро"""
        n = int(rng.integers(1, max_vertices + 1))
        edges = [(int(rng.integers(0, v)) + 1, v + 1) for v in range(1, n)]
        extra = int(rng.integers(0, max(0, max_internal - len(edges)) + 1))
        for _ in range(extra):
            if n == 1 or (loops and rng.random() < 0.3):
                if not loops:
                    break
                vertex = int(rng.integers(1, n + 1))
                edges.append((vertex, vertex))
            else:
                u, v = rng.choice(np.arange(1, n + 1), size=2, replace=False)
                edges.append((int(u), int(v)))

        external = sorted(int(x) for x in rng.integers(1, n + 1, size=int(rng.integers(1, n + 1))))
        spec = GraphSpec(
            vertices=n,
            internal_edges=tuple(
                EdgeSpec(u, v, float(rng.uniform(0.5, 2.0))) for u, v in edges
            ),
            external_edges=tuple(external),
        )
        graph = self.graph_usecase.build_graph(spec)
        index = self.graph_usecase.mode_index(graph)
        locals_ = [
            self.local_usecase.constant_local(
                v, self._random_involution(rng, len(index.local_keys(v)), unitary)
            )
            for v in graph.vertices()
        ]
        return Fixture(name="random", system=ScatteringSystem(graph, tuple(locals_), index))
