"""Общие фикстуры для тестов проекта."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.games.models import FreeTypeRepr, Game


@pytest.fixture
def adamo_game() -> Game:
    """Единственная P-игра с четырьмя игроками."""
    return Game(FreeTypeRepr((3,)))


@pytest.fixture
def example_game() -> Game:
    """Игра (2,2,1,3) с n=9: (26; 1,1,2,2,5,7,7,7,19)."""
    return Game(FreeTypeRepr((2, 2, 1, 3)))


@pytest.fixture
def temp_db_path(tmp_path: Path) -> str:
    """Возвращает путь к временной БД SQLite."""
    return str(tmp_path / "test.sqlite3")
