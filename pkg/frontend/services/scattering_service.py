"""
Сервис для расчёта полной матрицы рассеяния по сетке импульсов
"""

from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from backend.internal.entity.errors import NearPoleError, SizeMismatchError
from backend.internal.entity.system import ScatteringSystem
from backend.internal.repo.persistent.graph_spec_json import GraphSpecJson
from backend.internal.usecase.generators_usecase import GeneratorsUseCase
from backend.internal.usecase.solver_usecase import SolverUseCase
from backend.pkg.logger import get_logger
from frontend.utils.grid_pool import run_ordered

logger = get_logger(__name__)


class ScatteringService:
    def __init__(
        self,
        spec_repo: GraphSpecJson,
        generators_usecase: GeneratorsUseCase,
        solver_usecase: SolverUseCase,
    ):
        self.spec_repo = spec_repo
        self.generators = generators_usecase
        self.solver = solver_usecase

    def load_system(self, path: Union[str, Path]) -> ScatteringSystem:
        """Прочитать граф из файла и проверить его"""
        return self.generators.build_system(self.spec_repo.load(path))

    def stot_point(self, system: ScatteringSystem, p: complex) -> Dict[str, Any]:
        try:
            result = self.solver.total_scattering(system.graph, system.locals, system.index, p)
        except NearPoleError as e:
            logger.warning("Точка p=%s пропущена: %s", p, e)
            return {
                "p": complex(p),
                "matrix": None,
                "near_pole": True,
                "sigma_min": e.sigma_min,
                "sigma_max": e.sigma_max,
            }
        return {
            "p": complex(p),
            "matrix": result.matrix,
            "near_pole": False,
            "sigma_min": result.sigma_min,
            "sigma_max": result.sigma_max,
        }

    def stot_grid(
        self, system: ScatteringSystem, momenta: Sequence[complex], workers: int = 1
    ) -> List[Dict[str, Any]]:
        """S_tot во всех точках; точки около полюсов помечаются, а не прерывают расчёт"""
        return run_ordered(lambda p: self.stot_point(system, p), list(momenta), workers)

    def verify_point(self, system: ScatteringSystem, p: complex) -> Dict[str, Any]:
        graph, locals_, index = system.graph, system.locals, system.index
        try:
            involution = self.solver.verify_involution(graph, locals_, index, p)
            unitarity = None
            if complex(p).imag == 0 and system.all_unitary():
                unitarity = self.solver.verify_unitarity(graph, locals_, index, p)
        except NearPoleError as e:
            logger.warning("Проверка в точке p=%s пропущена: %s", p, e)
            return {"p": complex(p), "involution": None, "unitarity": None, "near_pole": True}
        return {
            "p": complex(p),
            "involution": involution,
            "unitarity": unitarity,
            "near_pole": False,
        }

    def verify_grid(
        self, system: ScatteringSystem, momenta: Sequence[complex], workers: int = 1
    ) -> List[Dict[str, Any]]:
        """Отклонения от S(p)S(-p) = I и от унитарности по сетке"""
        return run_ordered(lambda p: self.verify_point(system, p), list(momenta), workers)

    def equiv_point(
        self, first: ScatteringSystem, second: ScatteringSystem, p: complex
    ) -> Dict[str, Any]:
        try:
            a = self.solver.total_scattering(first.graph, first.locals, first.index, p).matrix
            b = self.solver.total_scattering(second.graph, second.locals, second.index, p).matrix
        except NearPoleError as e:
            logger.warning("Сравнение в точке p=%s пропущено: %s", p, e)
            return {"p": complex(p), "deviation": None, "near_pole": True}
        return {
            "p": complex(p),
            "deviation": float(np.max(np.abs(a - b), initial=0.0)),
            "near_pole": False,
        }

    def equiv_grid(
        self,
        first: ScatteringSystem,
        second: ScatteringSystem,
        momenta: Sequence[complex],
        workers: int = 1,
    ) -> List[Dict[str, Any]]:
        """Отклонение полных матриц двух графов на общей сетке"""
        if first.graph.external_count() != second.graph.external_count():
            raise SizeMismatchError(
                f"Число внешних рёбер различается: {first.graph.external_count()} "
                f"и {second.graph.external_count()}"
            )
        return run_ordered(lambda p: self.equiv_point(first, second, p), list(momenta), workers)
