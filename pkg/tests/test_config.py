"""Тесты загрузки конфигурации из окружения."""

from __future__ import annotations

import pytest

from src.config import Config


def test_config_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in (
        "PARSIGAMES_ORACLE_CAP",
        "PARSIGAMES_ENUM_CAP",
        "PARSIGAMES_MAX_M",
        "PARSIGAMES_DB_PATH",
        "PARSIGAMES_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    cfg = Config.from_env()
    assert cfg.oracle_cap == 16
    assert cfg.enumeration_cap == 16
    assert cfg.max_m == 20
    assert cfg.db_path.endswith("catalog.db")
    assert cfg.log_level == "INFO"


def test_config_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("PARSIGAMES_ORACLE_CAP", "12")
    monkeypatch.setenv("PARSIGAMES_DB_PATH", "/tmp/games.db")
    monkeypatch.setenv("PARSIGAMES_LOG_LEVEL", "debug")
    cfg = Config.from_env()
    assert cfg.oracle_cap == 12
    assert cfg.db_path == "/tmp/games.db"
    assert cfg.log_level == "DEBUG"


def test_config_rejects_non_integer(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("PARSIGAMES_MAX_M", "двадцать")
    with pytest.raises(SystemExit):
        Config.from_env()
