"""
Форматы вывода результатов: колонки таблиц и преобразование чисел
"""

import math
from typing import List, Optional

import numpy as np

COLUMNS = {
    "stot": ["p_re", "p_im", "row", "col", "re", "im", "abs2", "near_pole"],
    "poles": ["zeta_re", "zeta_im", "p_re", "p_im", "multiplicity", "coupled"],
    "spectrum": ["p"],
    "verify": ["p_re", "p_im", "involution", "unitarity", "near_pole"],
    "equiv": ["p_re", "p_im", "deviation", "near_pole"],
}


def complex_pair(z: complex) -> List[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def matrix_pairs(matrix: np.ndarray) -> List[List[List[float]]]:
    return [[complex_pair(z) for z in row] for row in matrix]


def optional_float(value: Optional[float]) -> Optional[float]:
    """JSON не допускает NaN: отсутствующее значение записывается как null"""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return None
    return float(value)
