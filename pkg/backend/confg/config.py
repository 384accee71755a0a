"""
Конфигурация приложения: допуски численных методов, параметры CLI и логирования
"""

import os
from dotenv import load_dotenv

load_dotenv()


def _float_env(name: str, default: str) -> float:
    return float(os.getenv(name, default))


def _int_env(name: str, default: str) -> int:
    return int(os.getenv(name, default))


class LocalConfig:
    """Параметры проверки локальных матриц рассеяния"""

    def __init__(
        self,
        involution_tol: float,
        unitarity_tol: float,
        sample_count: int,
        sample_p_min: float,
        sample_p_max: float,
        rotation_tol: float,
    ):
        self.involution_tol = involution_tol
        self.unitarity_tol = unitarity_tol
        self.sample_count = sample_count
        self.sample_p_min = sample_p_min
        self.sample_p_max = sample_p_max
        self.rotation_tol = rotation_tol

    @classmethod
    def from_env(cls) -> "LocalConfig":
        """Создать конфигурацию из переменных окружения"""
        return cls(
            involution_tol=_float_env("QGRAPH_INVOLUTION_TOL", "1e-10"),
            unitarity_tol=_float_env("QGRAPH_UNITARITY_TOL", "1e-10"),
            sample_count=_int_env("QGRAPH_LOCAL_SAMPLES", "16"),
            sample_p_min=_float_env("QGRAPH_LOCAL_P_MIN", "0.1"),
            sample_p_max=_float_env("QGRAPH_LOCAL_P_MAX", "10"),
            rotation_tol=_float_env("QGRAPH_ROTATION_TOL", "1e-12"),
        )


class SolverConfig:
    """Параметры вычисления полной матрицы рассеяния"""

    def __init__(
        self,
        pole_threshold: float,
        oracle_tail_tol: float,
        oracle_max_terms: int,
        oracle_im_offset: float,
    ):
        self.pole_threshold = pole_threshold
        self.oracle_tail_tol = oracle_tail_tol
        self.oracle_max_terms = oracle_max_terms
        self.oracle_im_offset = oracle_im_offset

    @classmethod
    def from_env(cls) -> "SolverConfig":
        """Создать конфигурацию из переменных окружения"""
        return cls(
            pole_threshold=_float_env("QGRAPH_POLE_THRESHOLD", "1e-12"),
            oracle_tail_tol=_float_env("QGRAPH_ORACLE_TAIL_TOL", "1e-10"),
            oracle_max_terms=_int_env("QGRAPH_ORACLE_MAX_TERMS", "20000"),
            oracle_im_offset=_float_env("QGRAPH_ORACLE_IM_OFFSET", "0.2"),
        )


class SpectralConfig:
    """Параметры секулярного многочлена, поиска полюсов и спектра"""

    def __init__(
        self,
        fit_tol: float,
        trim_tol: float,
        held_out: int,
        dedup_tol: float,
        cluster_radius: float,
        newton_steps: int,
        null_tol: float,
        coupling_tol: float,
        scan_tol: float,
    ):
        self.fit_tol = fit_tol
        self.trim_tol = trim_tol
        self.held_out = held_out
        self.dedup_tol = dedup_tol
        self.cluster_radius = cluster_radius
        self.newton_steps = newton_steps
        self.null_tol = null_tol
        self.coupling_tol = coupling_tol
        self.scan_tol = scan_tol

    @classmethod
    def from_env(cls) -> "SpectralConfig":
        """Создать конфигурацию из переменных окружения"""
        return cls(
            fit_tol=_float_env("QGRAPH_FIT_TOL", "1e-9"),
            trim_tol=_float_env("QGRAPH_TRIM_TOL", "1e-12"),
            held_out=_int_env("QGRAPH_HELD_OUT", "8"),
            dedup_tol=_float_env("QGRAPH_DEDUP_TOL", "1e-8"),
            cluster_radius=_float_env("QGRAPH_CLUSTER_RADIUS", "1e-2"),
            newton_steps=_int_env("QGRAPH_NEWTON_STEPS", "5"),
            null_tol=_float_env("QGRAPH_NULL_TOL", "1e-7"),
            coupling_tol=_float_env("QGRAPH_COUPLING_TOL", "1e-6"),
            scan_tol=_float_env("QGRAPH_SCAN_TOL", "1e-10"),
        )


class CliConfig:
    """Параметры командной строки по умолчанию"""

    def __init__(self, workers: int, output_format: str, tol: float):
        self.workers = workers
        self.output_format = output_format
        self.tol = tol

    @classmethod
    def from_env(cls) -> "CliConfig":
        """Создать конфигурацию из переменных окружения"""
        workers = _int_env("QGRAPH_WORKERS", "0")
        return cls(
            workers=workers if workers > 0 else (os.cpu_count() or 1),
            output_format=os.getenv("QGRAPH_FORMAT", "json"),
            tol=_float_env("QGRAPH_TOL", "1e-8"),
        )


class LoggingConfig:
    """Параметры логирования"""

    def __init__(self, level: str):
        self.level = level

    @classmethod
    def from_env(cls) -> "LoggingConfig":
        """Создать конфигурацию из переменных окружения"""
        return cls(level=os.getenv("QGRAPH_LOG_LEVEL", "WARNING").upper())


class AppConfig:
    """Основная конфигурация приложения"""

    def __init__(
        self,
        local: LocalConfig,
        solver: SolverConfig,
        spectral: SpectralConfig,
        cli: CliConfig,
        logging: LoggingConfig,
    ):
        self.local = local
        self.solver = solver
        self.spectral = spectral
        self.cli = cli
        self.logging = logging

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Создать конфигурацию приложения из переменных окружения"""
        return cls(
            local=LocalConfig.from_env(),
            solver=SolverConfig.from_env(),
            spectral=SpectralConfig.from_env(),
            cli=CliConfig.from_env(),
            logging=LoggingConfig.from_env(),
        )


config = AppConfig.from_env()
