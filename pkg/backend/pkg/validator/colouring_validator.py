"""
Валидатор раскраски рёбер
"""

from typing import Tuple

from backend.internal.entity.colouring import Colouring


class ColouringValidator:
    @staticmethod
    def validate(colouring: Colouring) -> Tuple[bool, str]:
        """Взаимность, инъективность по обоим аргументам и правильность"""
        for alpha, row in enumerate(colouring.neighbours):
            present = [n for n in row if n is not None]
            if len(present) != len(set(present)):
                return False, f"Вершина {alpha + 1}: два цвета ведут к одному соседу"
            for a, beta in enumerate(row, start=1):
                if beta is None:
                    continue
                if beta == alpha:
                    return False, f"Вершина {alpha + 1}: цвет {a} образует петлю"
                if colouring.neighbour(beta, a) != alpha:
                    return (
                        False,
                        f"Нарушена взаимность: n_{alpha + 1}({a}) = {beta + 1}, "
                        f"но n_{beta + 1}({a}) != {alpha + 1}",
                    )
        return True, ""

    @staticmethod
    def validate_regular(colouring: Colouring) -> Tuple[bool, str]:
        for alpha, row in enumerate(colouring.neighbours):
            missing = [a for a, n in enumerate(row, start=1) if n is None]
            if missing:
                return (
                    False,
                    f"Раскраска не регулярна: у вершины {alpha + 1} нет цветов {missing}",
                )
        return True, ""
