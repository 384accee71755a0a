"""
Репозитории для работы с файлами
"""

from backend.internal.repo.persistent.graph_spec_json import GraphSpecJson
from backend.internal.repo.persistent.result_writer import ResultWriter

__all__ = ["GraphSpecJson", "ResultWriter"]
