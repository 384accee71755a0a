"""
Точка входа в приложение. Инициализирует backend и запускает командную строку
"""

from backend.confg.config import config
from backend.pkg.logger import setup_logging

# Backend: Repositories
from backend.internal.repo.persistent import GraphSpecJson, ResultWriter

# Backend: Use Cases
from backend.internal.usecase import (
    AssemblerUseCase,
    GeneratorsUseCase,
    GraphUseCase,
    LocalScatteringUseCase,
    SolverUseCase,
    SpectralUseCase,
)

# Frontend: Services
from frontend.services import FixtureService, ScatteringService, SpectralService

# Frontend: CLI
from frontend.cli import cli


def init_backend():
    """Инициализация backend компонентов"""
    # Создаем репозитории
    spec_repo = GraphSpecJson()
    result_writer = ResultWriter()

    # Создаем Use Cases
    graph_usecase = GraphUseCase()
    local_usecase = LocalScatteringUseCase(config.local)
    assembler_usecase = AssemblerUseCase()
    solver_usecase = SolverUseCase(assembler_usecase, config.solver)
    generators_usecase = GeneratorsUseCase(graph_usecase, local_usecase)
    spectral_usecase = SpectralUseCase(assembler_usecase, generators_usecase, config.spectral)

    # Создаем Services
    scattering_service = ScatteringService(spec_repo, generators_usecase, solver_usecase)
    spectral_service = SpectralService(spectral_usecase)
    fixture_service = FixtureService(generators_usecase, spec_repo)

    return {
        "result_writer": result_writer,
        "scattering_service": scattering_service,
        "spectral_service": spectral_service,
        "fixture_service": fixture_service,
    }


def main():
    """Главная функция приложения"""
    setup_logging(config.logging.level)
    cli(obj=init_backend(), prog_name="qgraph")


if __name__ == "__main__":
    main()
