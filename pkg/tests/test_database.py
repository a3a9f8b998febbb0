"""Интеграционные тесты SQLite-каталога игр."""

from __future__ import annotations

import pytest

from src.games.models import FreeTypeRepr
from src.games.representations import enumerate_games
from src.storage.database import Database


@pytest.mark.asyncio
async def test_database_upsert_and_get_game(temp_db_path: str) -> None:
    """Сохраняет каталог n=9 и читает игру по свободному типу."""
    db = Database(temp_db_path)
    await db.connect()
    try:
        written = await db.upsert_games(enumerate_games(9))
        assert written == 32
        assert await db.count(9) == 32

        loaded = await db.get_game(FreeTypeRepr((2, 2, 1, 3)))
        assert loaded is not None
        assert loaded["quota"] == "26"
        assert loaded["weights"] == ["1", "1", "2", "2", "5", "7", "7", "7", "19"]
        assert loaded["free_binary"] == [1, 0, 1, 1, 0]
        assert loaded["twin"] == [3, 1, 2, 2]
        assert loaded["self_twin"] is False
    finally:
        await db.close()


@pytest.mark.asyncio
async def test_database_upsert_is_idempotent(temp_db_path: str) -> None:
    db = Database(temp_db_path)
    await db.connect()
    try:
        await db.upsert_games(enumerate_games(8))
        await db.upsert_games(enumerate_games(8))
        assert await db.count(8) == 16
        assert await db.count(9) == 0
    finally:
        await db.close()


@pytest.mark.asyncio
async def test_database_find_by_quota(temp_db_path: str) -> None:
    """Двойники имеют одну квоту и находятся вместе."""
    db = Database(temp_db_path)
    await db.connect()
    try:
        await db.upsert_games(enumerate_games(8))
        found = await db.find_by_quota(8, 13)
        assert sorted(g["free_type"] for g in found) == [[3, 4], [4, 3]]
        assert await db.find_by_quota(8, 1000) == []
        assert await db.get_game(FreeTypeRepr((9,))) is None
    finally:
        await db.close()


@pytest.mark.asyncio
async def test_database_requires_connect(temp_db_path: str) -> None:
    db = Database(temp_db_path)
    with pytest.raises(RuntimeError):
        await db.count(8)
