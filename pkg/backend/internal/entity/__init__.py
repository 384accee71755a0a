"""
Пакет сущностей приложения
"""

from backend.internal.entity.block_system import BlockSystem, PropagationMatrix
from backend.internal.entity.colouring import Colouring, ColourMatrices
from backend.internal.entity.graph import (
    EdgeSpec,
    ExternalEdge,
    Graph,
    GraphSpec,
    InternalEdge,
    LocalSpec,
)
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.mode_index import HalfEdge, ModeIndex, ModeVector, SlotKey
from backend.internal.entity.secular_polynomial import Pole, SecularPolynomial
from backend.internal.entity.system import Fixture, ScatteringSystem, TriangleStarPair
from backend.internal.entity.total_s_matrix import TotalSMatrix

__all__ = [
    "BlockSystem",
    "Colouring",
    "ColourMatrices",
    "EdgeSpec",
    "ExternalEdge",
    "Fixture",
    "Graph",
    "GraphSpec",
    "HalfEdge",
    "InternalEdge",
    "LocalScattering",
    "LocalSpec",
    "ModeIndex",
    "ModeVector",
    "Pole",
    "PropagationMatrix",
    "ScatteringSystem",
    "SecularPolynomial",
    "SlotKey",
    "TotalSMatrix",
    "TriangleStarPair",
]
