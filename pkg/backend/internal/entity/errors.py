"""
Иерархия исключений расчёта рассеяния на квантовых графах
"""

from typing import Optional


class ScatteringError(Exception):
    """Базовое исключение приложения"""

    exit_code = 3


class GraphSpecParseError(ScatteringError):
    """Файл описания графа не удалось разобрать"""

    exit_code = 1


class ScatteringValidationError(ScatteringError):
    """Входные данные не прошли проверку"""

    exit_code = 2


class DisconnectedGraphError(ScatteringValidationError):
    pass


class NonPositiveLengthError(ScatteringValidationError):
    pass


class DanglingVertexReferenceError(ScatteringValidationError):
    pass


class SizeMismatchError(ScatteringValidationError):
    pass


class NotInvolutiveError(ScatteringValidationError):
    pass


class DegreeMismatchError(ScatteringValidationError):
    pass


class ShapeMismatchError(ScatteringValidationError):
    pass


class MissingVertexMatrixError(ScatteringValidationError):
    pass


class IncommensurableLengthsError(ScatteringValidationError):
    pass


class NonConstantLocalsError(ScatteringValidationError):
    pass


class FixtureUnknownError(ScatteringValidationError):
    pass


class UnknownSolidError(ScatteringValidationError):
    pass


class UnknownFixtureError(ScatteringValidationError):
    pass


class NonRegularColouringError(ScatteringValidationError):
    pass


class NonUniformLocalsError(ScatteringValidationError):
    pass


class NotCompactGraphError(ScatteringValidationError):
    pass


class EmptyIntervalError(ScatteringValidationError):
    pass


class RunConfigError(ScatteringValidationError):
    pass


class UnserializableLocalError(ScatteringValidationError):
    """Локальную матрицу, заданную функцией от импульса, нельзя записать в файл"""

    pass


class ScatteringNumericalError(ScatteringError):
    """Численная процедура не дала надёжного результата"""

    exit_code = 3


class NearPoleError(ScatteringNumericalError):
    """Матрица E(p) - S22(p) почти вырождена"""

    def __init__(
        self,
        momentum: complex,
        sigma_min: float,
        sigma_max: float,
        message: Optional[str] = None,
    ):
        self.momentum = complex(momentum)
        self.sigma_min = float(sigma_min)
        self.sigma_max = float(sigma_max)
        super().__init__(
            message
            or f"Импульс p={self.momentum} близок к полюсу: "
            f"sigma_min={self.sigma_min:.3e}, sigma_max={self.sigma_max:.3e}"
        )


class SeriesDivergesError(ScatteringNumericalError):
    def __init__(self, spectral_radius: float):
        self.spectral_radius = float(spectral_radius)
        super().__init__(
            f"Ряд по путям расходится: спектральный радиус {self.spectral_radius:.6f} >= 1"
        )


class FitResidualTooLargeError(ScatteringNumericalError):
    pass


class DegenerateConstantPolynomialError(ScatteringNumericalError):
    pass


class VerificationFailedError(ScatteringNumericalError):
    pass
