"""
Общие объекты для тестов: use cases, собранные так же, как в main.init_backend
"""

import numpy as np
import pytest

from backend.confg.config import config
from backend.internal.repo.persistent import GraphSpecJson, ResultWriter
from backend.internal.usecase import (
    AssemblerUseCase,
    GeneratorsUseCase,
    GraphUseCase,
    LocalScatteringUseCase,
    SolverUseCase,
    SpectralUseCase,
)


@pytest.fixture(scope="session")
def graph_usecase():
    return GraphUseCase()


@pytest.fixture(scope="session")
def local_usecase():
    return LocalScatteringUseCase(config.local)


@pytest.fixture(scope="session")
def assembler():
    return AssemblerUseCase()


@pytest.fixture(scope="session")
def solver(assembler):
    return SolverUseCase(assembler, config.solver)


@pytest.fixture(scope="session")
def generators(graph_usecase, local_usecase):
    return GeneratorsUseCase(graph_usecase, local_usecase)


@pytest.fixture(scope="session")
def spectral(assembler, generators):
    return SpectralUseCase(assembler, generators, config.spectral)


@pytest.fixture(scope="session")
def spec_repo():
    return GraphSpecJson()


@pytest.fixture(scope="session")
def result_writer():
    return ResultWriter()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def stot(solver):
    """S_tot системы в точке p"""

    def evaluate(system, p):
        return solver.total_scattering(system.graph, system.locals, system.index, p).matrix

    return evaluate
