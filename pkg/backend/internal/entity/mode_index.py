"""
Нумерация мод: внешние рёбра и направленные внутренние полурёбра
"""

from dataclasses import dataclass
from typing import Dict, NamedTuple, Tuple

import numpy as np

from backend.internal.entity.errors import SizeMismatchError
from backend.internal.entity.graph import Graph


class SlotKey(NamedTuple):
    """
    Устойчивый ключ моды. kind = "ext": ident - ext_id, side = 0.
    kind = "int": ident - edge_id, side 0 выходит из u (первая половина петли),
    side 1 выходит из v (вторая половина петли)
    """

    kind: str
    ident: int
    side: int = 0


@dataclass(frozen=True)
class HalfEdge:
    """Направленное полуребро tail -> head; half различает половины петли"""

    key: SlotKey
    tail: int
    head: int
    j: int
    half: int
    length: float

    def order(self) -> Tuple[int, int, int, int]:
        return (self.tail, self.head, self.j, self.half)


@dataclass(frozen=True)
class ModeIndex:
    external_keys: Tuple[SlotKey, ...]
    half_edges: Tuple[HalfEdge, ...]
    local_orderings: Tuple[Tuple[SlotKey, ...], ...]

    def __post_init__(self):
        ext = {key: i for i, key in enumerate(self.external_keys)}
        internal = {h.key: i for i, h in enumerate(self.half_edges)}
        partners = []
        for h in self.half_edges:
            partners.append(internal[SlotKey("int", h.key.ident, 1 - h.key.side)])
        object.__setattr__(self, "_external_slots", ext)
        object.__setattr__(self, "_internal_slots", internal)
        object.__setattr__(self, "_partners", tuple(partners))

    @property
    def external_slots(self) -> Dict[int, int]:
        """ext_id -> номер строки"""
        return {key.ident: i for key, i in self._external_slots.items()}

    @property
    def internal_slots(self) -> Dict[SlotKey, int]:
        return dict(self._internal_slots)

    def external_count(self) -> int:
        return len(self.external_keys)

    def internal_size(self) -> int:
        return len(self.half_edges)

    def slot_of(self, key: SlotKey) -> int:
        """Номер в своём пространстве (внешнем или внутреннем)"""
        if key.kind == "ext":
            return self._external_slots[key]
        return self._internal_slots[key]

    def partner(self, slot: int) -> int:
        return self._partners[slot]

    def local_keys(self, vertex: int) -> Tuple[SlotKey, ...]:
        return self.local_orderings[vertex]

    def slot_lengths(self) -> np.ndarray:
        return np.array([h.length for h in self.half_edges], dtype=float)


@dataclass(frozen=True)
class ModeVector:
    """Внешняя часть A(p) длины N_e и внутренняя B(p) длины 2N_i"""

    external_part: np.ndarray
    internal_part: np.ndarray

    @classmethod
    def from_parts(cls, graph: Graph, external, internal) -> "ModeVector":
        a = np.asarray(external, dtype=complex).reshape(-1)
        b = np.asarray(internal, dtype=complex).reshape(-1)
        if a.size != graph.external_count():
            raise SizeMismatchError(
                f"Длина A(p) равна {a.size}, ожидалось {graph.external_count()}"
            )
        if b.size != 2 * graph.internal_count():
            raise SizeMismatchError(
                f"Длина B(p) равна {b.size}, ожидалось {2 * graph.internal_count()}"
            )
        return cls(external_part=a, internal_part=b)
