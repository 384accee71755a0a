"""
Сервисный слой для связи frontend с backend
"""

from frontend.services.fixture_service import FixtureService
from frontend.services.scattering_service import ScatteringService
from frontend.services.spectral_service import SpectralService

__all__ = ["FixtureService", "ScatteringService", "SpectralService"]
