"""
Use case для сборки блоков S11, S12, S21, S22 и матрицы распространения E(p)
"""

from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import block_diag

from backend.internal.entity.block_system import BlockSystem, PropagationMatrix
from backend.internal.entity.errors import (
    IncommensurableLengthsError,
    MissingVertexMatrixError,
    SizeMismatchError,
)
from backend.internal.entity.graph import Graph
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.mode_index import ModeIndex, SlotKey
from backend.pkg.logger import get_logger

logger = get_logger(__name__)

COMMENSURABILITY_TOL = 1e-9


class AssemblerUseCase:
    @staticmethod
    def _global_position(index: ModeIndex, key: SlotKey) -> int:
        if key.kind == "ext":
            return index.slot_of(key)
        return index.external_count() + index.slot_of(key)

    def _check_locals(
        self, graph: Graph, locals_: Sequence[Optional[LocalScattering]], index: ModeIndex
    ) -> None:
        if len(locals_) < graph.vertex_count:
            raise MissingVertexMatrixError(
                f"Задано {len(locals_)} локальных матриц на {graph.vertex_count} вершин"
            )
        for vertex in graph.vertices():
            local = locals_[vertex]
            if local is None:
                raise MissingVertexMatrixError(
                    f"Для вершины {vertex + 1} не задана локальная матрица"
                )
            degree = len(index.local_keys(vertex))
            if local.size != degree:
                raise SizeMismatchError(
                    f"Вершина {vertex + 1}: размер матрицы {local.size}, степень {degree}"
                )

    def _evaluate(self, local: LocalScattering, p: complex) -> np.ndarray:
        matrix = local.at(p)
        if matrix.shape != (local.size, local.size):
            raise SizeMismatchError(
                f"Вершина {local.vertex + 1}: S(p) имеет форму {matrix.shape} при p={p}"
            )
        return matrix

    def block_diagonal(
        self,
        graph: Graph,
        locals_: Sequence[LocalScattering],
        index: ModeIndex,
        p: complex,
    ) -> np.ndarray:
        """Прямая сумма S_alpha(p) в порядке вершин"""
        self._check_locals(graph, locals_, index)
        blocks = [self._evaluate(locals_[v], p) for v in graph.vertices()]
        if not blocks:
            return np.zeros((0, 0), dtype=complex)
        return np.asarray(block_diag(*blocks), dtype=complex)

    def scatter_permutation(self, graph: Graph, index: ModeIndex) -> np.ndarray:
        """Матрица P: P (прямая сумма S_alpha) P^T = [[S11, S12], [S21, S22]]"""
        keys: List[SlotKey] = [k for v in graph.vertices() for k in index.local_keys(v)]
        size = len(keys)
        permutation = np.zeros((size, size))
        for column, key in enumerate(keys):
            permutation[self._global_position(index, key), column] = 1.0
        return permutation

    def assemble_blocks(
        self,
        graph: Graph,
        locals_: Sequence[LocalScattering],
        index: ModeIndex,
        p: complex,
    ) -> BlockSystem:
        self._check_locals(graph, locals_, index)
        n_e = index.external_count()
        size = n_e + index.internal_size()
        full = np.zeros((size, size), dtype=complex)
        for vertex in graph.vertices():
            positions = [self._global_position(index, k) for k in index.local_keys(vertex)]
            full[np.ix_(positions, positions)] = self._evaluate(locals_[vertex], p)

        return BlockSystem(
            s11=full[:n_e, :n_e],
            s12=full[:n_e, n_e:],
            s21=full[n_e:, :n_e],
            s22=full[n_e:, n_e:],
            momentum=complex(p),
        )

    def phase_diagonal(self, graph: Graph, index: ModeIndex, p: complex) -> np.ndarray:
        """D(p) = diag(exp(-i p d_slot))"""
        return np.diag(np.exp(-1j * complex(p) * index.slot_lengths()))

    def assemble_E(self, graph: Graph, index: ModeIndex, p: complex) -> PropagationMatrix:
        """
        exp(-i p d) на паре слотов (alpha->beta, j), (beta->alpha, j);
        для петли антидиагональный блок 2x2 на двух её половинах
        """
        size = index.internal_size()
        matrix = np.zeros((size, size), dtype=complex)
        phases = np.exp(-1j * complex(p) * index.slot_lengths())
        for slot in range(size):
            matrix[slot, index.partner(slot)] = phases[slot]
        return PropagationMatrix(matrix=matrix, momentum=complex(p))

    def slot_exponents(self, index: ModeIndex, unit: float) -> np.ndarray:
        """Длины слотов в единицах unit; целые по объявлению соизмеримости"""
        ratios = index.slot_lengths() / float(unit)
        exponents = np.rint(ratios).astype(int)
        bad = (np.abs(ratios - exponents) > COMMENSURABILITY_TOL * np.maximum(1.0, ratios)) | (
            exponents < 1
        )
        if np.any(bad):
            slot = int(np.flatnonzero(bad)[0])
            raise IncommensurableLengthsError(
                f"Длина {index.slot_lengths()[slot]} не кратна единице {float(unit)}"
            )
        return exponents

    def assemble_E_zeta(
        self, graph: Graph, index: ModeIndex, zeta: complex, unit: float
    ) -> np.ndarray:
        """E с элементами zeta**n, n = длина / unit"""
        exponents = self.slot_exponents(index, unit)
        size = index.internal_size()
        matrix = np.zeros((size, size), dtype=complex)
        for slot in range(size):
            matrix[slot, index.partner(slot)] = complex(zeta) ** int(exponents[slot])
        return matrix
