"""
Настройка логирования приложения
"""

import logging
import sys
import threading

from backend.confg.config import config

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_configured = False
_lock = threading.Lock()


def setup_logging(level: str = None) -> None:
    """Настроить корневой логгер приложения (вывод в stderr)"""
    global _configured
    with _lock:
        root = logging.getLogger("qgraph")
        root.setLevel(level or config.logging.level)
        if not _configured:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(handler)
            _configured = True


def get_logger(name: str) -> logging.Logger:
    """Логгер модуля внутри иерархии qgraph"""
    if not _configured:
        setup_logging()
    return logging.getLogger(f"qgraph.{name}")
