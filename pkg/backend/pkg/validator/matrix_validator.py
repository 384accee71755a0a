"""
Валидатор матриц: форма, инволюция S(p)S(-p) = I, унитарность
"""

from typing import Iterable, Tuple

import numpy as np

from backend.internal.entity.local_scattering import MatrixEvaluator


class MatrixValidator:
    @staticmethod
    def validate_square(matrix: np.ndarray, size: int) -> Tuple[bool, str]:
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            return False, f"Матрица должна быть квадратной, получена форма {matrix.shape}"
        if matrix.shape[0] != size:
            return (
                False,
                f"Размер матрицы {matrix.shape[0]} не совпадает со степенью вершины {size}",
            )
        return True, ""

    @staticmethod
    def involution_defect(matrix: np.ndarray) -> float:
        identity = np.eye(matrix.shape[0])
        return float(np.max(np.abs(matrix @ matrix - identity), initial=0.0))

    @staticmethod
    def unitarity_defect(matrix: np.ndarray) -> float:
        identity = np.eye(matrix.shape[0])
        return float(np.max(np.abs(matrix.conj().T @ matrix - identity), initial=0.0))

    @staticmethod
    def validate_involution(matrix: np.ndarray, tol: float) -> Tuple[bool, str]:
        defect = MatrixValidator.involution_defect(matrix)
        if not defect < tol:
            return False, f"Нарушено S*S = I: отклонение {defect:.3e} >= {tol:.1e}"
        return True, ""

    @staticmethod
    def validate_sampled_involution(
        evaluator: MatrixEvaluator, momenta: Iterable[float], size: int, tol: float
    ) -> Tuple[bool, str]:
        for p in momenta:
            forward = np.asarray(evaluator(complex(p)), dtype=complex)
            backward = np.asarray(evaluator(complex(-p)), dtype=complex)
            ok, error_msg = MatrixValidator.validate_square(forward, size)
            if not ok:
                return False, error_msg
            defect = float(np.max(np.abs(forward @ backward - np.eye(size)), initial=0.0))
            if not defect < tol:
                return (
                    False,
                    f"Нарушено S(p)S(-p) = I при p={p:.6g}: отклонение {defect:.3e}",
                )
        return True, ""
