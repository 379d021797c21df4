"""Sistema de logging estruturado."""

import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

# Handlers instalados por setup_logging (removidos a cada nova chamada)
_installed: list[logging.Handler] = []


class JSONFormatter(logging.Formatter):
    """Formatter para logs em formato JSON."""

    def format(self, record: logging.LogRecord) -> str:
        """Formata o log em JSON.

        Args:
            record: Registro de log.

        Returns:
            String JSON formatada.
        """
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        # Campos extras (logger.info(..., extra={"extra": {...}}))
        extra = getattr(record, "extra", None)
        if isinstance(extra, dict):
            log_data.update(extra)

        return json.dumps(log_data, default=str)


def setup_logging(config: dict[str, Any]) -> None:
    """Configura o sistema de logging.

    Args:
        config: Dicionário de configuração (usa a seção ``logging``).
    """
    log_config = config.get("logging") or {}
    log_level = str(log_config.get("level", "INFO")).upper()
    log_format = log_config.get("format", "json")
    log_file = log_config.get("file")

    if log_format == "json":
        formatter: logging.Formatter = JSONFormatter()
    else:
        formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    root_logger = logging.getLogger()
    for handler in _installed:
        root_logger.removeHandler(handler)
        handler.close()
    _installed.clear()

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setFormatter(formatter)
    _installed.append(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setFormatter(formatter)
        _installed.append(file_handler)

    root_logger.setLevel(getattr(logging, log_level, logging.INFO))
    for handler in _installed:
        root_logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Obtém um logger.

    Args:
        name: Nome do logger.

    Returns:
        Instância do logger.
    """
    return logging.getLogger(name)
