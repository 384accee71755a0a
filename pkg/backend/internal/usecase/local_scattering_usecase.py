"""
Use case для локальных матриц рассеяния вершин
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from backend.confg.config import LocalConfig, config as app_config
from backend.internal.entity.errors import (
    DegreeMismatchError,
    MissingVertexMatrixError,
    NotInvolutiveError,
    ShapeMismatchError,
    SizeMismatchError,
)
from backend.internal.entity.graph import Graph, LocalSpec
from backend.internal.entity.local_scattering import LocalScattering, MatrixEvaluator
from backend.internal.entity.mode_index import ModeIndex, SlotKey
from backend.pkg.logger import get_logger
from backend.pkg.validator.matrix_validator import MatrixValidator

logger = get_logger(__name__)

_HALF = Fraction(1, 2)

# Второе масштабно-инвариантное решение для вершины степени 4 (первая строка - внешний слот)
TETRA_CASE2_ENTRIES: Tuple[Tuple[Fraction, ...], ...] = (
    (-_HALF, _HALF, _HALF, _HALF),
    (_HALF, Fraction(5, 6), Fraction(-1, 6), Fraction(-1, 6)),
    (_HALF, Fraction(-1, 6), Fraction(5, 6), Fraction(-1, 6)),
    (_HALF, Fraction(-1, 6), Fraction(-1, 6), Fraction(5, 6)),
)

LOCAL_FAMILIES = ("kirchhoff", "tetra2", "dirichlet")


def rational_square(entries: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Квадрат матрицы в точной рациональной арифметике"""
    n = len(entries)
    return [
        [sum((entries[i][k] * entries[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = np.array(matrix, dtype=complex)
    matrix.setflags(write=False)
    return matrix


class LocalScatteringUseCase:
    def __init__(self, local_config: Optional[LocalConfig] = None):
        self.config = local_config or app_config.local

    def sample_momenta(self) -> np.ndarray:
        return np.linspace(
            self.config.sample_p_min, self.config.sample_p_max, self.config.sample_count
        )

    def constant_local(
        self,
        vertex: int,
        entries,
        size: Optional[int] = None,
        family: Optional[str] = None,
    ) -> LocalScattering:
        """Постоянная матрица; инволюция S*S = I проверяется один раз"""
        matrix = np.asarray(entries, dtype=complex)
        if matrix.ndim != 2:
            raise SizeMismatchError(f"Матрица вершины {vertex + 1} должна быть двумерной")
        expected = matrix.shape[0] if size is None else size
        is_valid, error_msg = MatrixValidator.validate_square(matrix, expected)
        if not is_valid:
            raise SizeMismatchError(f"Вершина {vertex + 1}: {error_msg}")

        is_valid, error_msg = MatrixValidator.validate_involution(
            matrix, self.config.involution_tol
        )
        if not is_valid:
            raise NotInvolutiveError(f"Вершина {vertex + 1}: {error_msg}")

        unitary = MatrixValidator.unitarity_defect(matrix) < self.config.unitarity_tol
        return LocalScattering(
            vertex=vertex,
            size=matrix.shape[0],
            matrix=_frozen(matrix),
            family=family,
            unitary=unitary,
        )

    def momentum_local(
        self, vertex: int, evaluator: MatrixEvaluator, size: int
    ) -> LocalScattering:
        """Матрица, зависящая от импульса; инволюция проверяется на выборке p и -p"""
        momenta = self.sample_momenta()
        first = np.asarray(evaluator(complex(momenta[0])), dtype=complex)
        is_valid, error_msg = MatrixValidator.validate_square(first, size)
        if not is_valid:
            raise SizeMismatchError(f"Вершина {vertex + 1}: {error_msg}")

        is_valid, error_msg = MatrixValidator.validate_sampled_involution(
            evaluator, momenta, size, self.config.involution_tol
        )
        if not is_valid:
            raise NotInvolutiveError(f"Вершина {vertex + 1}: {error_msg}")

        unitary = all(
            MatrixValidator.unitarity_defect(np.asarray(evaluator(complex(p)), dtype=complex))
            < self.config.unitarity_tol
            for p in momenta
        )
        logger.debug(
            "Вершина %d: S(p) проверена в %d точках, унитарность=%s",
            vertex + 1,
            len(momenta),
            unitary,
        )
        return LocalScattering(
            vertex=vertex, size=size, evaluator=evaluator, unitary=unitary
        )

    def kirchhoff_local(self, vertex: int, degree: int) -> LocalScattering:
        """(2/n) * J - I"""
        if degree < 1:
            raise SizeMismatchError(f"Степень вершины {vertex + 1} должна быть не меньше 1")
        matrix = np.full((degree, degree), 2.0 / degree) - np.eye(degree)
        return self.constant_local(vertex, matrix, family="kirchhoff")

    def dirichlet_local(self, vertex: int, degree: int) -> LocalScattering:
        """Полное отражение со знаком минус: -I"""
        if degree < 1:
            raise SizeMismatchError(f"Степень вершины {vertex + 1} должна быть не меньше 1")
        return self.constant_local(vertex, -np.eye(degree), family="dirichlet")

    def tetrahedron_case2_local(self, vertex: int, degree: int = 4) -> LocalScattering:
        if degree != 4:
            raise DegreeMismatchError(
                f"Матрица tetra2 определена для степени 4, у вершины {vertex + 1} степень {degree}"
            )
        square = rational_square(TETRA_CASE2_ENTRIES)
        if any(square[i][j] != (1 if i == j else 0) for i in range(4) for j in range(4)):
            raise NotInvolutiveError("Таблица tetra2 не удовлетворяет S*S = I")
        matrix = np.array([[float(x) for x in row] for row in TETRA_CASE2_ENTRIES])
        return self.constant_local(vertex, matrix, family="tetra2")

    def check_rotation_invariance(
        self, local: LocalScattering, cycle: Sequence[int]
    ) -> bool:
        """Проверить diag(1, J) S diag(1, J^-1) = S для циклической перестановки J"""
        n = len(cycle)
        if local.size != n + 1:
            raise ShapeMismatchError(
                f"Ожидалась матрица размера {n + 1} (1 внешний + {n} внутренних слотов), "
                f"получено {local.size}"
            )
        if sorted(cycle) != list(range(n)):
            raise ShapeMismatchError(f"{list(cycle)} не является перестановкой")

        position, length = cycle[0], 1
        while position != 0:
            position, length = cycle[position], length + 1
        if length != n:
            raise ShapeMismatchError(f"Перестановка {list(cycle)} не является циклом длины {n}")

        rotation = np.zeros((n + 1, n + 1))
        rotation[0, 0] = 1.0
        for source, target in enumerate(cycle):
            rotation[target + 1, source + 1] = 1.0

        momenta = [0.0] if local.is_constant else self.sample_momenta()
        for p in momenta:
            s = local.at(p)
            rotated = rotation @ s @ rotation.T
            if np.max(np.abs(rotated - s)) >= self.config.rotation_tol:
                return False
        return True

    def transport_local(
        self,
        local: LocalScattering,
        old_keys: Sequence[SlotKey],
        new_keys: Sequence[SlotKey],
        vertex: int,
    ) -> LocalScattering:
        """Переписать матрицу в другом порядке слотов вершины: Q S Q^T"""
        if sorted(old_keys) != sorted(new_keys) or len(old_keys) != local.size:
            raise ShapeMismatchError(
                f"Наборы слотов вершины {vertex + 1} не совпадают при переносе матрицы"
            )
        position = {key: i for i, key in enumerate(old_keys)}
        order = [position[key] for key in new_keys]

        if local.is_constant:
            matrix = local.matrix[np.ix_(order, order)]
            return LocalScattering(
                vertex=vertex,
                size=local.size,
                matrix=_frozen(matrix),
                family=local.family,
                unitary=local.unitary,
            )

        evaluator = local.evaluator
        return LocalScattering(
            vertex=vertex,
            size=local.size,
            evaluator=lambda p: np.asarray(evaluator(p), dtype=complex)[np.ix_(order, order)],
            family=local.family,
            unitary=local.unitary,
        )

    def from_family(self, vertex: int, family: str, degree: int) -> LocalScattering:
        if family == "kirchhoff":
            return self.kirchhoff_local(vertex, degree)
        if family == "tetra2":
            return self.tetrahedron_case2_local(vertex, degree)
        if family == "dirichlet":
            return self.dirichlet_local(vertex, degree)
        raise ShapeMismatchError(f"Неизвестное семейство локальных матриц '{family}'")

    def locals_from_spec(
        self, graph: Graph, index: ModeIndex, local_specs: Sequence[LocalSpec]
    ) -> List[LocalScattering]:
        """Локальные матрицы для всех вершин по записям описания графа"""
        by_vertex: Dict[int, LocalSpec] = {spec.vertex - 1: spec for spec in local_specs}
        result = []
        for vertex in graph.vertices():
            spec = by_vertex.get(vertex)
            if spec is None:
                raise MissingVertexMatrixError(
                    f"Для вершины {vertex + 1} не задана локальная матрица"
                )
            degree = len(index.local_keys(vertex))
            if spec.family is not None:
                result.append(self.from_family(vertex, spec.family, degree))
            else:
                result.append(self.constant_local(vertex, spec.matrix, size=degree))
        return result
