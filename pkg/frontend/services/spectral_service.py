"""
Сервис для полюсов и спектра
"""

from typing import List, Optional, Tuple

from backend.internal.entity.secular_polynomial import Pole, SecularPolynomial
from backend.internal.entity.system import ScatteringSystem
from backend.internal.usecase.spectral_usecase import SpectralUseCase


class SpectralService:
    def __init__(self, spectral_usecase: SpectralUseCase):
        self.usecase = spectral_usecase

    def poles(
        self,
        system: ScatteringSystem,
        unit: Optional[float] = None,
        include_decoupled: bool = False,
    ) -> Tuple[SecularPolynomial, List[Pole]]:
        """Секулярный многочлен и его полюса"""
        poly = self.usecase.secular_polynomial(system.graph, system.locals, system.index, unit)
        return poly, self.usecase.find_poles(poly, include_decoupled=include_decoupled)

    def spectrum(self, system: ScatteringSystem, p_min: float, p_max: float) -> List[float]:
        """Собственные импульсы компактного графа на (p_min, p_max]"""
        return self.usecase.compact_spectrum(
            system.graph, system.locals, system.index, p_min, p_max
        )
