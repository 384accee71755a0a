"""
Сервис для графов-образцов
"""

from typing import List

from backend.internal.entity.graph import GraphSpec
from backend.internal.repo.persistent.graph_spec_json import GraphSpecJson
from backend.internal.usecase.generators_usecase import GeneratorsUseCase


class FixtureService:
    def __init__(self, generators_usecase: GeneratorsUseCase, spec_repo: GraphSpecJson):
        self.usecase = generators_usecase
        self.spec_repo = spec_repo

    def names(self) -> List[str]:
        """Имена доступных графов-образцов"""
        return self.usecase.fixture_names()

    def generate_spec(self, name: str, **params) -> GraphSpec:
        fixture = self.usecase.generate(name, **params)
        return self.usecase.to_graph_spec(fixture.system)

    def generate_text(self, name: str, **params) -> str:
        """Описание графа-образца в формате JSON"""
        return self.spec_repo.dumps(self.generate_spec(name, **params))
