"""
Репозиторий для записи результатов расчёта в JSON и CSV
"""

import json
import sys
from pathlib import Path
from typing import Any, Optional, Union

import pandas as pd

CSV_FLOAT_FORMAT = "%.17g"


class ResultWriter:
    def render_json(self, payload: Any) -> str:
        """Без временных меток: вывод зависит только от входных данных"""
        return json.dumps(payload, indent=2, sort_keys=True, allow_nan=True) + "\n"

    def render_csv(self, table: pd.DataFrame) -> str:
        return table.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")

    def write(self, text: str, path: Optional[Union[str, Path]] = None) -> None:
        if path is None:
            sys.stdout.write(text)
            return
        Path(path).write_text(text, encoding="utf-8")

    def write_json(self, payload: Any, path: Optional[Union[str, Path]] = None) -> None:
        self.write(self.render_json(payload), path)

    def write_csv(self, table: pd.DataFrame, path: Optional[Union[str, Path]] = None) -> None:
        self.write(self.render_csv(table), path)
