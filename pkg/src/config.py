"""Конфигурация приложения — загрузка переменных окружения из .env."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

_ENV_PATH = Path(__file__).resolve().parent.parent / ".env"
load_dotenv(_ENV_PATH)


def _int_env(name: str, default: int) -> int:
    """Возвращает int из переменной окружения или завершает процесс с ошибкой."""
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"Переменная окружения {name}={value!r} не является целым числом.") from None


@dataclass(frozen=True)
class Config:
    """Неизменяемая конфигурация приложения."""

    oracle_cap: int
    enumeration_cap: int
    max_m: int
    db_path: str
    log_level: str

    @classmethod
    def from_env(cls) -> Config:
        """Создаёт конфигурацию из переменных окружения."""
        return cls(
            oracle_cap=_int_env("PARSIGAMES_ORACLE_CAP", 16),
            enumeration_cap=_int_env("PARSIGAMES_ENUM_CAP", 16),
            max_m=_int_env("PARSIGAMES_MAX_M", 20),
            db_path=os.getenv(
                "PARSIGAMES_DB_PATH", str(Path(__file__).resolve().parent.parent / "catalog.db")
            ),
            log_level=os.getenv("PARSIGAMES_LOG_LEVEL", "INFO").upper(),
        )


config = Config.from_env()
