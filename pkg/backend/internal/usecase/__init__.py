"""
Use cases для бизнес-логики
"""

from backend.internal.usecase.assembler_usecase import AssemblerUseCase
from backend.internal.usecase.generators_usecase import GeneratorsUseCase
from backend.internal.usecase.graph_usecase import GraphUseCase
from backend.internal.usecase.local_scattering_usecase import LocalScatteringUseCase
from backend.internal.usecase.solver_usecase import SolverUseCase
from backend.internal.usecase.spectral_usecase import SpectralUseCase

__all__ = [
    "AssemblerUseCase",
    "GeneratorsUseCase",
    "GraphUseCase",
    "LocalScatteringUseCase",
    "SolverUseCase",
    "SpectralUseCase",
]
