"""
Валидаторы входных данных
"""

from backend.pkg.validator.colouring_validator import ColouringValidator
from backend.pkg.validator.graph_spec_validator import GraphSpecValidator
from backend.pkg.validator.matrix_validator import MatrixValidator
from backend.pkg.validator.run_config_validator import RunConfigValidator

__all__ = [
    "ColouringValidator",
    "GraphSpecValidator",
    "MatrixValidator",
    "RunConfigValidator",
]
