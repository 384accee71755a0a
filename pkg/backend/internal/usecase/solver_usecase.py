"""
Use case для полной матрицы рассеяния S_tot(p) = S11 + S12 [E - S22]^-1 S21,
внутренних мод и проверочного разложения по путям
"""

import math
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import lu_factor, lu_solve, svdvals

from backend.confg.config import SolverConfig, config as app_config
from backend.internal.entity.errors import NearPoleError, SeriesDivergesError, SizeMismatchError
from backend.internal.entity.graph import Graph
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.mode_index import ModeIndex
from backend.internal.entity.total_s_matrix import TotalSMatrix
from backend.internal.usecase.assembler_usecase import AssemblerUseCase
from backend.pkg.logger import get_logger

logger = get_logger(__name__)

Locals = Sequence[LocalScattering]


def max_defect(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix), initial=0.0))


class SolverUseCase:
    def __init__(self, assembler: AssemblerUseCase, solver_config: Optional[SolverConfig] = None):
        self.assembler = assembler
        self.config = solver_config or app_config.solver

    def _factor(self, matrix: np.ndarray, p: complex):
        sigma = svdvals(matrix)
        sigma_min, sigma_max = float(sigma[-1]), float(sigma[0])
        if sigma_min <= self.config.pole_threshold * sigma_max:
            raise NearPoleError(p, sigma_min, sigma_max)
        return lu_factor(matrix), sigma_min, sigma_max

    def total_scattering(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: complex
    ) -> TotalSMatrix:
        p = complex(p)
        blocks = self.assembler.assemble_blocks(graph, locals_, index, p)
        if index.internal_size() == 0:
            return TotalSMatrix(matrix=blocks.s11.copy(), momentum=p)

        e = self.assembler.assemble_E(graph, index, p).matrix
        lu, sigma_min, sigma_max = self._factor(e - blocks.s22, p)
        matrix = blocks.s11 + blocks.s12 @ lu_solve(lu, blocks.s21)
        return TotalSMatrix(matrix=matrix, momentum=p, sigma_min=sigma_min, sigma_max=sigma_max)

    def internal_modes(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: complex, external
    ) -> np.ndarray:
        """B(p) = [E(-p) - S22(-p)]^-1 S21(-p) A(p)"""
        a = np.asarray(external, dtype=complex).reshape(-1)
        if a.size != index.external_count():
            raise SizeMismatchError(
                f"Длина A(p) равна {a.size}, ожидалось {index.external_count()}"
            )
        if index.internal_size() == 0:
            return np.zeros(0, dtype=complex)

        minus_p = -complex(p)
        blocks = self.assembler.assemble_blocks(graph, locals_, index, minus_p)
        e = self.assembler.assemble_E(graph, index, minus_p).matrix
        lu, _, _ = self._factor(e - blocks.s22, minus_p)
        return lu_solve(lu, blocks.s21 @ a)

    def mode_residual(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: complex, external
    ) -> float:
        """
        Невязка определяющих соотношений при A(-p) = S_tot(-p) A(p):
        A(p) = S11 A(-p) + S12 B(-p), B(p) = S21 A(-p) + S22 B(-p), B(p) = E(p) B(-p)
        """
        p = complex(p)
        a_plus = np.asarray(external, dtype=complex).reshape(-1)
        a_minus = self.total_scattering(graph, locals_, index, -p).matrix @ a_plus
        b_plus = self.internal_modes(graph, locals_, index, p, a_plus)
        b_minus = self.internal_modes(graph, locals_, index, -p, a_minus)

        blocks = self.assembler.assemble_blocks(graph, locals_, index, p)
        e = self.assembler.assemble_E(graph, index, p).matrix
        residuals = [a_plus - blocks.s11 @ a_minus - blocks.s12 @ b_minus]
        if index.internal_size():
            residuals.append(b_plus - blocks.s21 @ a_minus - blocks.s22 @ b_minus)
            residuals.append(b_plus - e @ b_minus)
        return max(max_defect(r) for r in residuals)

    def oracle_order(self, rate: float, tail_tol: float) -> int:
        """Наименьший K с rate^(K+1) / (1 - rate) < tail_tol"""
        if rate <= 0.0:
            return 0
        order = math.ceil(math.log(tail_tol * (1.0 - rate)) / math.log(rate)) - 1
        return max(order, 0)

    def path_sum_oracle(
        self,
        graph: Graph,
        locals_: Locals,
        index: ModeIndex,
        p: complex,
        max_order: Optional[int] = None,
        tail_tol: Optional[float] = None,
    ) -> np.ndarray:
        """
        S11 + S12 sum_{n=0..K} [E(-p) S22]^n E(-p) S21.
        Только для проверки: сходится при спектральном радиусе E(-p) S22 меньше 1
        """
        p = complex(p)
        blocks = self.assembler.assemble_blocks(graph, locals_, index, p)
        if index.internal_size() == 0:
            return blocks.s11.copy()

        e_minus = self.assembler.assemble_E(graph, index, -p).matrix
        bounce = e_minus @ blocks.s22
        radius = float(np.max(np.abs(np.linalg.eigvals(bounce))))
        if radius >= 1.0:
            raise SeriesDivergesError(radius)

        if max_order is None:
            norm = float(np.linalg.norm(bounce, 2))
            rate = norm if norm < 1.0 else radius
            max_order = self.oracle_order(rate, tail_tol or self.config.oracle_tail_tol)
            if max_order > self.config.oracle_max_terms:
                logger.warning(
                    "Порядок ряда %d ограничен значением %d",
                    max_order,
                    self.config.oracle_max_terms,
                )
                max_order = self.config.oracle_max_terms
        logger.debug("Ряд по путям: p=%s, радиус=%.4f, K=%d", p, radius, max_order)

        term = e_minus @ blocks.s21
        total = term.copy()
        for _ in range(max_order):
            term = bounce @ term
            total += term
        return blocks.s11 + blocks.s12 @ total

    def oracle_momentum(self, graph: Graph, re_p: float) -> complex:
        """Импульс со сдвигом Im p = offset / d_min, где ряд сходится"""
        d_min = graph.min_length() or 1.0
        return complex(re_p, self.config.oracle_im_offset / d_min)

    def verify_involution(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: complex
    ) -> float:
        """max |S_tot(p) S_tot(-p) - I|"""
        forward = self.total_scattering(graph, locals_, index, p).matrix
        backward = self.total_scattering(graph, locals_, index, -complex(p)).matrix
        return max_defect(forward @ backward - np.eye(forward.shape[0]))

    def verify_unitarity(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: float
    ) -> float:
        """max |S_tot^H S_tot - I| при вещественном p"""
        matrix = self.total_scattering(graph, locals_, index, p).matrix
        return max_defect(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))
