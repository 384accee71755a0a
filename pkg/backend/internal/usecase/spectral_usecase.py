"""
Use case для секулярного определителя det(E(p) - S22(p)): многочлен по
zeta = exp(-i p l) для соизмеримых длин, полюса и спектр компактного графа
"""

import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import det, lu_factor, lu_solve, svd
from scipy.optimize import minimize_scalar
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from backend.confg.config import SpectralConfig, config as app_config
from backend.internal.entity.errors import (
    DegenerateConstantPolynomialError,
    EmptyIntervalError,
    FitResidualTooLargeError,
    FixtureUnknownError,
    IncommensurableLengthsError,
    NonConstantLocalsError,
    NonUniformLocalsError,
    NotCompactGraphError,
)
from backend.internal.entity.graph import Graph
from backend.internal.entity.local_scattering import LocalScattering
from backend.internal.entity.mode_index import ModeIndex
from backend.internal.entity.secular_polynomial import Pole, SecularPolynomial
from backend.internal.entity.system import ScatteringSystem
from backend.internal.usecase.assembler_usecase import AssemblerUseCase
from backend.internal.usecase.generators_usecase import GeneratorsUseCase
from backend.pkg.logger import get_logger

logger = get_logger(__name__)

Locals = Sequence[LocalScattering]

MULTIPLE_ROOT_TOL = 1e-9
NEWTON_SCAN_STEPS = 50

# Знаки совместных собственных векторов матриц цветов (по одному на сектор)
TETRAHEDRON_SIGNS: Tuple[Tuple[int, int, int], ...] = (
    (-1, -1, 1),
    (1, -1, -1),
    (-1, 1, -1),
    (1, 1, 1),
)
CUBE_SIGNS: Tuple[Tuple[int, int, int], ...] = (
    (1, 1, 1),
    (-1, 1, 1),
    (1, -1, 1),
    (-1, -1, 1),
    (1, 1, -1),
    (-1, 1, -1),
    (1, -1, -1),
    (-1, -1, -1),
)
SECTOR_SIGNS = {"tetrahedron": TETRAHEDRON_SIGNS, "cube": CUBE_SIGNS}


def principal_momentum(zeta: complex, unit: float) -> complex:
    """Главное решение exp(-i p l) = zeta: p = i Log(zeta) / l"""
    return 1j * np.log(complex(zeta)) / float(unit)


def _clean(zeta: complex) -> complex:
    zeta = complex(zeta)
    if abs(zeta.imag) < 1e-14 * max(1.0, abs(zeta)):
        zeta = complex(zeta.real, 0.0)
    return zeta


class SpectralUseCase:
    def __init__(
        self,
        assembler: AssemblerUseCase,
        generators: GeneratorsUseCase,
        spectral_config: Optional[SpectralConfig] = None,
    ):
        self.assembler = assembler
        self.generators = generators
        self.config = spectral_config or app_config.spectral

    def secular_determinant(
        self, graph: Graph, locals_: Locals, index: ModeIndex, p: complex
    ) -> complex:
        if index.internal_size() == 0:
            return 1.0 + 0.0j
        blocks = self.assembler.assemble_blocks(graph, locals_, index, p)
        e = self.assembler.assemble_E(graph, index, p).matrix
        return complex(det(e - blocks.s22))

    def secular_determinant_zeta(
        self,
        graph: Graph,
        locals_: Locals,
        index: ModeIndex,
        zeta: complex,
        unit: float,
    ) -> complex:
        """det(E(zeta) - S22) для постоянных локальных матриц"""
        self._require_constant(locals_)
        if index.internal_size() == 0:
            return 1.0 + 0.0j
        s22 = self.assembler.assemble_blocks(graph, locals_, index, 0.0).s22
        return complex(det(self.assembler.assemble_E_zeta(graph, index, zeta, unit) - s22))

    @staticmethod
    def _require_constant(locals_: Locals) -> None:
        for local in locals_:
            if not local.is_constant:
                raise NonConstantLocalsError(
                    f"Локальная матрица вершины {local.vertex + 1} зависит от импульса"
                )

    def secular_polynomial(
        self,
        graph: Graph,
        locals_: Locals,
        index: ModeIndex,
        unit: Optional[float] = None,
        samples: Optional[int] = None,
    ) -> SecularPolynomial:
        """
        Коэффициенты det(E - S22) по zeta: значения в samples точках единичной
        окружности (по умолчанию 2(D+1)) и обратное дискретное преобразование Фурье
        """
        unit = unit if unit is not None else graph.lengths_unit
        if unit is None:
            raise IncommensurableLengthsError(
                "Единица соизмеримости длин не объявлена (lengths_unit или --unit)"
            )
        unit = float(unit)
        self._require_constant(locals_)
        system = ScatteringSystem(graph=graph, locals=tuple(locals_), index=index)

        if index.internal_size() == 0:
            return SecularPolynomial(unit, np.array([1.0 + 0.0j]), 0, system)

        degree_bound = int(self.assembler.slot_exponents(index, unit).sum())
        samples = max(int(samples or 0), 2 * (degree_bound + 1))
        s22 = self.assembler.assemble_blocks(graph, locals_, index, 0.0).s22

        def evaluate(zeta: complex) -> complex:
            return complex(det(self.assembler.assemble_E_zeta(graph, index, zeta, unit) - s22))

        nodes = np.exp(2j * np.pi * np.arange(samples) / samples)
        values = np.array([evaluate(z) for z in nodes])
        coefficients = np.fft.fft(values)[: degree_bound + 1] / samples

        scale = max(float(np.max(np.abs(coefficients))), np.finfo(float).tiny)
        held_out = np.exp(
            2j * np.pi * (np.arange(self.config.held_out) + 1.0 / 3.0) / self.config.held_out
        )
        residual = max(abs(P.polyval(z, coefficients) - evaluate(z)) for z in held_out)
        if residual >= self.config.fit_tol * scale:
            raise FitResidualTooLargeError(
                f"Невязка интерполяции {residual:.3e} превышает {self.config.fit_tol:.1e} * {scale:.3e}"
            )
        if residual >= 0.1 * self.config.fit_tol * scale:
            logger.warning("Невязка интерполяции %.3e близка к допуску", residual)

        logger.debug(
            "Секулярный многочлен: D=%d, точек=%d, невязка=%.3e", degree_bound, samples, residual
        )
        return SecularPolynomial(
            unit_length=unit,
            coefficients=coefficients,
            degree_bound=degree_bound,
            system=system,
        )

    def trimmed_coefficients(self, poly: SecularPolynomial) -> np.ndarray:
        """Отбросить малые старшие и младшие коэффициенты (младшие дают корни zeta = 0)"""
        c = np.asarray(poly.coefficients, dtype=complex)
        scale = float(np.max(np.abs(c), initial=0.0))
        if scale == 0.0:
            raise DegenerateConstantPolynomialError("Секулярный определитель тождественно равен нулю")
        significant = np.flatnonzero(np.abs(c) >= self.config.trim_tol * scale)
        return c[significant[0] : significant[-1] + 1]

    def _newton(self, coefficients: np.ndarray, start: complex) -> complex:
        """Не более newton_steps шагов, шаг принимается только если уменьшает |f|"""
        derivative = P.polyder(coefficients)
        zeta = complex(start)
        value = abs(P.polyval(zeta, coefficients))
        for _ in range(self.config.newton_steps):
            slope = P.polyval(zeta, derivative)
            if slope == 0 or value == 0:
                break
            candidate = zeta - P.polyval(zeta, coefficients) / slope
            candidate_value = abs(P.polyval(candidate, coefficients))
            if candidate_value >= value:
                break
            zeta, value = candidate, candidate_value
        return zeta

    def polish_root(
        self, system: ScatteringSystem, unit: float, zeta: complex, multiplicity: int = 1
    ) -> complex:
        """
        Ньютон по самому определителю M(zeta) = E(zeta) - S22:
        шаг m / tr(M^-1 dM/dzeta), принимается только если уменьшает |det M|
        """
        graph, locals_, index = system.graph, system.locals, system.index
        zeta = complex(zeta)
        if index.internal_size() == 0 or zeta == 0:
            return zeta
        s22 = self.assembler.assemble_blocks(graph, locals_, index, 0.0).s22
        exponents = self.assembler.slot_exponents(index, unit)
        value = abs(self.secular_determinant_zeta(graph, locals_, index, zeta, unit))

        for _ in range(self.config.newton_steps):
            if value == 0.0:
                break
            e = self.assembler.assemble_E_zeta(graph, index, zeta, unit)
            with np.errstate(all="ignore"):
                derivative = (exponents / zeta)[:, None] * e
                trace = complex(np.trace(lu_solve(lu_factor(e - s22), derivative)))
            if trace == 0 or not np.isfinite(trace):
                break
            candidate = zeta - multiplicity / trace
            candidate_value = abs(
                self.secular_determinant_zeta(graph, locals_, index, candidate, unit)
            )
            if candidate_value >= value:
                break
            zeta, value = candidate, candidate_value
        return zeta

    def _clusters(self, roots: np.ndarray) -> List[np.ndarray]:
        radius = self.config.cluster_radius * np.maximum(1.0, np.abs(roots))
        distance = np.abs(roots[:, None] - roots[None, :])
        adjacency = csr_matrix(distance <= np.maximum(radius[:, None], radius[None, :]))
        count, labels = connected_components(adjacency, directed=False)
        return [np.flatnonzero(labels == k) for k in range(count)]

    def find_roots(self, poly: SecularPolynomial) -> List[Pole]:
        """Все ненулевые корни с кратностями, по возрастанию модуля, затем аргумента"""
        c = self.trimmed_coefficients(poly)
        if len(c) < 2:
            raise DegenerateConstantPolynomialError(
                "Секулярный многочлен постоянен: полюсов нет"
            )
        raw = P.polyroots(c)

        found: List[Tuple[complex, int]] = []
        for members in self._clusters(raw):
            multiplicity = len(members)
            centre = complex(np.mean(raw[members]))
            if multiplicity > 1:
                polished = self._newton(P.polyder(c, multiplicity - 1), centre)
                magnitude = float(np.sum(np.abs(c) * np.abs(polished) ** np.arange(len(c))))
                if abs(P.polyval(polished, c)) <= MULTIPLE_ROOT_TOL * magnitude:
                    found.append((polished, multiplicity))
                    continue
                logger.debug(
                    "Кластер из %d корней около %s не является кратным корнем", multiplicity, centre
                )
                found.extend((self._newton(c, z), 1) for z in raw[members])
                continue
            found.append((self._newton(c, centre), 1))

        # коэффициенты дают только начальные приближения
        if poly.system is not None:
            found = [
                (self.polish_root(poly.system, poly.unit_length, zeta, multiplicity), multiplicity)
                for zeta, multiplicity in found
            ]

        merged: List[List] = []
        for zeta, multiplicity in found:
            for entry in merged:
                if abs(entry[0] - zeta) <= self.config.dedup_tol:
                    entry[1] += multiplicity
                    break
            else:
                merged.append([zeta, multiplicity])

        poles = [
            Pole(
                zeta=_clean(zeta),
                momentum=principal_momentum(zeta, poly.unit_length),
                multiplicity=multiplicity,
            )
            for zeta, multiplicity in merged
        ]
        poles.sort(key=lambda r: (round(abs(r.zeta), 10), round(float(np.angle(r.zeta)), 10)))
        return poles

    def is_coupled(self, system: ScatteringSystem, momentum: complex) -> bool:
        """
        Нуль определителя даёт полюс S_tot, только если нуль-векторы
        E - S22 связаны с внешними рёбрами через S12 и S21
        """
        graph, index = system.graph, system.index
        blocks = self.assembler.assemble_blocks(graph, system.locals, index, momentum)
        e = self.assembler.assemble_E(graph, index, momentum).matrix
        u, sigma, vh = svd(e - blocks.s22)
        null_count = max(1, int(np.sum(sigma <= self.config.null_tol * sigma[0])))
        right = vh[-null_count:].conj().T
        left = u[:, -null_count:]
        return (
            float(np.linalg.norm(blocks.s12 @ right)) > self.config.coupling_tol
            and float(np.linalg.norm(left.conj().T @ blocks.s21)) > self.config.coupling_tol
        )

    def find_poles(
        self, poly: SecularPolynomial, include_decoupled: bool = False
    ) -> List[Pole]:
        """Корни секулярного многочлена, которые являются полюсами S_tot"""
        roots = self.find_roots(poly)
        system = poly.system
        if system is None or system.graph.is_compact():
            return roots

        result = []
        for root in roots:
            coupled = self.is_coupled(system, root.momentum)
            if coupled or include_decoupled:
                result.append(
                    Pole(root.zeta, root.momentum, root.multiplicity, coupled=coupled)
                )
            else:
                logger.debug("Корень zeta=%s не связан с внешними рёбрами", root.zeta)
        return result

    def compact_spectrum(
        self,
        graph: Graph,
        locals_: Locals,
        index: ModeIndex,
        p_min: float,
        p_max: float,
    ) -> List[float]:
        """Вещественные нули секулярного определителя на (p_min, p_max]"""
        if not graph.is_compact():
            raise NotCompactGraphError(
                f"Спектр определён для компактного графа, внешних рёбер: {graph.external_count()}"
            )
        if not p_min < p_max:
            raise EmptyIntervalError(f"Пустой интервал ({p_min}, {p_max}]")
        if index.internal_size() == 0:
            return []

        def magnitude(p: float) -> float:
            return abs(self.secular_determinant(graph, locals_, index, p))

        step = math.pi / (8.0 * graph.total_length())
        count = int(math.ceil((p_max - p_min) / step)) + 1
        grid = np.concatenate(
            ([p_min - step], np.linspace(p_min, p_max, count), [p_max + step])
        )
        values = np.array([magnitude(p) for p in grid])
        scale = max(float(np.max(values)), 1.0)
        minima = [
            i
            for i in range(1, len(grid) - 1)
            if values[i] <= values[i - 1] and values[i] <= values[i + 1]
        ]
        logger.debug("Сканирование спектра: %d точек, %d минимумов", len(grid), len(minima))

        roots: List[float] = []
        for i in minima:
            bracket = minimize_scalar(
                magnitude,
                bounds=(grid[i - 1], grid[i + 1]),
                method="bounded",
                options={"xatol": 1e-14},
            )
            root = self._refine_real(graph, locals_, index, float(bracket.x))
            if root is None or abs(root.imag) > 1e-6 * (1.0 + abs(root.real)):
                continue
            if magnitude(root.real) > 1e-7 * scale:
                continue
            roots.append(root.real)

        edge_tol = 1e-9 * max(1.0, abs(p_min), abs(p_max))
        roots = [p for p in roots if p_min + edge_tol < p <= p_max + edge_tol]
        roots.sort()
        unique: List[float] = []
        for p in roots:
            if not unique or abs(p - unique[-1]) > self.config.dedup_tol:
                unique.append(p)
        return unique

    def _refine_real(
        self, graph: Graph, locals_: Locals, index: ModeIndex, start: float
    ) -> Optional[complex]:
        """Комплексный метод Ньютона с центральной разностью"""
        p = complex(start)
        for _ in range(NEWTON_SCAN_STEPS):
            h = 1e-6 * (1.0 + abs(p))
            value = self.secular_determinant(graph, locals_, index, p)
            slope = (
                self.secular_determinant(graph, locals_, index, p + h)
                - self.secular_determinant(graph, locals_, index, p - h)
            ) / (2.0 * h)
            if value == 0:
                return p
            if slope == 0:
                return None
            shift = value / slope
            p -= shift
            if abs(shift) < self.config.scan_tol * (1.0 + abs(p)):
                return p
        return p

    def _reduced_local(self, local: Union[np.ndarray, Sequence[np.ndarray]]) -> np.ndarray:
        if isinstance(local, np.ndarray) and local.ndim == 2:
            return np.asarray(local, dtype=complex)
        matrices = [np.asarray(m, dtype=complex) for m in local]
        first = matrices[0]
        for other in matrices[1:]:
            if other.shape != first.shape or not np.allclose(other, first, atol=1e-14, rtol=0):
                raise NonUniformLocalsError(
                    "Сведение к матрицам 3x3 требует одинаковых локальных матриц во всех вершинах"
                )
        return first

    def sector_polynomial(self, solid: str, reduced: np.ndarray) -> np.ndarray:
        """Произведение det(zeta I_alpha - S_red) по секторам, коэффициенты по возрастанию"""
        product = np.array([1.0 + 0.0j])
        for signs in SECTOR_SIGNS[solid]:
            d = np.diag(np.array(signs, dtype=float))
            # det(zeta D - S) = det(D) det(zeta I - D S)
            factor = np.linalg.det(d) * np.poly(d @ reduced)[::-1]
            product = P.polymul(product, factor)
        return product

    def symmetry_factor_check(
        self, solid: str, local: Union[np.ndarray, Sequence[np.ndarray]]
    ) -> bool:
        """
        Сравнить собранный секулярный многочлен платонова тела с произведением
        определителей 3x3 по секторам. local задаётся в порядке цветов
        (0 - внешний слот, a - цвет a)
        """
        if solid not in SECTOR_SIGNS:
            raise FixtureUnknownError(f"Сведение по симметрии не задано для '{solid}'")
        matrix = self._reduced_local(local)

        graph, colouring = self.generators.platonic(solid, 1.0)
        locals_ = self.generators.coloured_locals(graph, colouring, matrix)
        index = self.generators.graph_usecase.mode_index(graph)
        assembled = self.secular_polynomial(graph, locals_, index, unit=1.0).coefficients
        sectors = self.sector_polynomial(solid, matrix[1:, 1:])
        if len(sectors) != len(assembled):
            logger.warning(
                "Степени не совпадают: собранный %d, по секторам %d",
                len(assembled) - 1,
                len(sectors) - 1,
            )
            return False
        deviation = float(
            np.max(np.abs(assembled / assembled[-1] - sectors / sectors[-1]))
        )
        logger.debug("Сведение по симметрии %s: отклонение %.3e", solid, deviation)
        return deviation < 1e-9
