"""
Репозиторий для чтения и записи описаний графа в формате JSON
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from backend.internal.entity.errors import GraphSpecParseError
from backend.internal.entity.graph import EdgeSpec, GraphSpec, LocalSpec
from backend.internal.usecase.local_scattering_usecase import LOCAL_FAMILIES

TOP_LEVEL_FIELDS = {"vertices", "internal_edges", "external_edges", "lengths_unit", "locals"}
EDGE_FIELDS = {"u", "v", "length"}
EXTERNAL_FIELDS = {"vertex"}
LOCAL_FIELDS = {"vertex", "family", "matrix"}


def _check_fields(record: Any, allowed: set, required: Iterable[str], where: str) -> None:
    if not isinstance(record, dict):
        raise GraphSpecParseError(f"{where}: ожидался объект, получено {type(record).__name__}")
    unknown = sorted(set(record) - allowed)
    if unknown:
        raise GraphSpecParseError(f"{where}: неизвестные поля {unknown}")
    missing = [name for name in required if name not in record]
    if missing:
        raise GraphSpecParseError(f"{where}: отсутствуют поля {missing}")


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphSpecParseError(f"{where}: ожидалось целое число, получено {value!r}")
    return value


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GraphSpecParseError(f"{where}: ожидалось число, получено {value!r}")
    return float(value)


def _unit(value: Any) -> Optional[Fraction]:
    if value is None:
        return None
    try:
        if isinstance(value, str):
            unit = Fraction(value.strip())
        else:
            unit = Fraction(repr(_number(value, "lengths_unit")))
    except (ValueError, ZeroDivisionError):
        raise GraphSpecParseError(f"lengths_unit: не удалось разобрать {value!r}")
    if unit <= 0:
        raise GraphSpecParseError(f"lengths_unit должна быть положительной, получено {value!r}")
    return unit


def _matrix(value: Any, where: str):
    if not isinstance(value, list) or not value:
        raise GraphSpecParseError(f"{where}: матрица должна быть непустым списком строк")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise GraphSpecParseError(f"{where}: строка {i + 1} должна быть списком")
        entries = []
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != 2:
                raise GraphSpecParseError(
                    f"{where}: элемент ({i + 1}, {j + 1}) должен быть парой [re, im]"
                )
            re = _number(entry[0], where)
            im = _number(entry[1], where)
            entries.append(complex(re, im))
        rows.append(tuple(entries))
        if len(entries) != len(rows[0]):
            raise GraphSpecParseError(
                f"{where}: строка {i + 1} содержит {len(entries)} элементов, первая строка {len(rows[0])}"
            )
    return tuple(rows)


class GraphSpecJson:
    def loads(self, text: str) -> GraphSpec:
        """Разобрать описание графа из строки JSON"""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphSpecParseError(f"Некорректный JSON: {e}")
        return self.from_dict(data)

    def load(self, path: Union[str, Path]) -> GraphSpec:
        """Прочитать описание графа из файла"""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise GraphSpecParseError(f"Не удалось прочитать файл {path}: {e}")
        return self.loads(text)

    def from_dict(self, data: Any) -> GraphSpec:
        _check_fields(data, TOP_LEVEL_FIELDS, ["vertices"], "Описание графа")
        vertices = _integer(data["vertices"], "vertices")

        internal = data.get("internal_edges", [])
        if not isinstance(internal, list):
            raise GraphSpecParseError("internal_edges должно быть списком")
        edges = []
        for k, record in enumerate(internal):
            where = f"internal_edges[{k}]"
            _check_fields(record, EDGE_FIELDS, ["u", "v", "length"], where)
            edges.append(
                EdgeSpec(
                    u=_integer(record["u"], where),
                    v=_integer(record["v"], where),
                    length=_number(record["length"], where),
                )
            )

        external = data.get("external_edges", [])
        if not isinstance(external, list):
            raise GraphSpecParseError("external_edges должно быть списком")
        externals = []
        for k, record in enumerate(external):
            where = f"external_edges[{k}]"
            _check_fields(record, EXTERNAL_FIELDS, ["vertex"], where)
            externals.append(_integer(record["vertex"], where))

        local_records = data.get("locals", [])
        if not isinstance(local_records, list):
            raise GraphSpecParseError("locals должно быть списком")
        locals_: List[LocalSpec] = []
        seen = set()
        for k, record in enumerate(local_records):
            where = f"locals[{k}]"
            _check_fields(record, LOCAL_FIELDS, ["vertex"], where)
            vertex = _integer(record["vertex"], where)
            if vertex in seen:
                raise GraphSpecParseError(f"{where}: вершина {vertex} задана повторно")
            seen.add(vertex)
            has_family, has_matrix = "family" in record, "matrix" in record
            if has_family == has_matrix:
                raise GraphSpecParseError(f"{where}: нужно ровно одно из полей family или matrix")
            if has_family:
                if record["family"] not in LOCAL_FAMILIES:
                    raise GraphSpecParseError(
                        f"{where}: неизвестное семейство {record['family']!r}, "
                        f"допустимы {list(LOCAL_FAMILIES)}"
                    )
                locals_.append(LocalSpec(vertex=vertex, family=record["family"]))
            else:
                locals_.append(LocalSpec(vertex=vertex, matrix=_matrix(record["matrix"], where)))

        return GraphSpec(
            vertices=vertices,
            internal_edges=tuple(edges),
            external_edges=tuple(externals),
            lengths_unit=_unit(data.get("lengths_unit")),
            locals=tuple(locals_),
        )

    def to_dict(self, spec: GraphSpec) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "vertices": spec.vertices,
            "internal_edges": [
                {"u": e.u, "v": e.v, "length": e.length} for e in spec.internal_edges
            ],
            "external_edges": [{"vertex": v} for v in spec.external_edges],
            "locals": [],
        }
        if spec.lengths_unit is not None:
            unit = spec.lengths_unit
            data["lengths_unit"] = unit.numerator if unit.denominator == 1 else str(unit)
        for local in spec.locals:
            if local.family is not None:
                data["locals"].append({"vertex": local.vertex, "family": local.family})
            else:
                data["locals"].append(
                    {
                        "vertex": local.vertex,
                        "matrix": [[[z.real, z.imag] for z in row] for row in local.matrix],
                    }
                )
        return data

    def dumps(self, spec: GraphSpec) -> str:
        return json.dumps(self.to_dict(spec), indent=2, sort_keys=True) + "\n"

    def dump(self, spec: GraphSpec, path: Union[str, Path]) -> None:
        """Записать описание графа в файл"""
        Path(path).write_text(self.dumps(spec), encoding="utf-8")
