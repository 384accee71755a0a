"""
Пул потоков для расчёта по сетке импульсов
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_ordered(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Применить func ко всем точкам. Результаты возвращаются в порядке items
    независимо от порядка выполнения
    """
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))
