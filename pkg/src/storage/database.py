"""Асинхронный слой доступа к SQLite: каталог P-игр."""

from __future__ import annotations

import json
import logging
from typing import Dict, Iterable, List

import aiosqlite

from src.games.models import FreeTypeRepr, Game
from src.games.representations import game_to_dict
from src.games.symmetry import twin

logger = logging.getLogger(__name__)

_SCHEMA = """
CREATE TABLE IF NOT EXISTS games (
    free_type   TEXT    PRIMARY KEY,
    n           INTEGER NOT NULL,
    h           INTEGER NOT NULL,
    free_binary TEXT    NOT NULL,
    quota       TEXT    NOT NULL,
    weights     TEXT    NOT NULL,
    self_twin   INTEGER NOT NULL DEFAULT 0,
    twin        TEXT    NOT NULL
);

CREATE INDEX IF NOT EXISTS games_by_quota ON games (n, quota);
"""


def _key(x: FreeTypeRepr) -> str:
    return ",".join(str(c) for c in x.components)


class Database:
    """Обёртка над aiosqlite для хранения и поиска игр каталога."""

    def __init__(self, db_path: str) -> None:
        self._db_path = db_path
        self._db: aiosqlite.Connection | None = None

    async def connect(self) -> None:
        """Открывает соединение и создаёт таблицы."""
        self._db = await aiosqlite.connect(self._db_path)
        self._db.row_factory = aiosqlite.Row
        await self._db.executescript(_SCHEMA)
        await self._db.commit()
        logger.info("БД каталога инициализирована: %s", self._db_path)

    async def close(self) -> None:
        if self._db:
            await self._db.close()

    @property
    def db(self) -> aiosqlite.Connection:
        if self._db is None:
            raise RuntimeError("Database.connect() не был вызван")
        return self._db

    # ── Запись ─────────────────────────────────────────────────────

    async def upsert_games(self, games: Iterable[Game]) -> int:
        """Создаёт или обновляет записи игр; возвращает число записанных строк."""
        rows = []
        for game in games:
            data = game_to_dict(game)
            rows.append(
                (
                    _key(game.free_type),
                    game.n,
                    game.h,
                    "".join(str(b) for b in data["free_binary"]),
                    data["quota"],
                    json.dumps(data["weights"]),
                    int(bool(data["self_twin"])),
                    _key(twin(game).free_type),
                )
            )
        await self.db.executemany(
            """
            INSERT INTO games (free_type, n, h, free_binary, quota, weights, self_twin, twin)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            ON CONFLICT(free_type) DO UPDATE SET
                n = excluded.n,
                h = excluded.h,
                free_binary = excluded.free_binary,
                quota = excluded.quota,
                weights = excluded.weights,
                self_twin = excluded.self_twin,
                twin = excluded.twin
            """,
            rows,
        )
        await self.db.commit()
        return len(rows)

    # ── Чтение ─────────────────────────────────────────────────────

    async def get_game(self, free_type: FreeTypeRepr) -> Dict[str, object] | None:
        """Запись игры по свободному типу или None."""
        cursor = await self.db.execute(
            "SELECT * FROM games WHERE free_type = ?", (_key(free_type),)
        )
        row = await cursor.fetchone()
        if row is None:
            return None
        return _row_to_dict(row)

    async def find_by_quota(self, n: int, quota: int) -> List[Dict[str, object]]:
        """Все игры с n игроками и данной минимальной квотой."""
        cursor = await self.db.execute(
            "SELECT * FROM games WHERE n = ? AND quota = ? ORDER BY free_binary",
            (n, str(quota)),
        )
        return [_row_to_dict(row) for row in await cursor.fetchall()]

    async def count(self, n: int) -> int:
        cursor = await self.db.execute("SELECT COUNT(*) FROM games WHERE n = ?", (n,))
        row = await cursor.fetchone()
        return int(row[0])


def _row_to_dict(row: aiosqlite.Row) -> Dict[str, object]:
    return {
        "n": row["n"],
        "h": row["h"],
        "free_type": [int(c) for c in row["free_type"].split(",")],
        "free_binary": [int(b) for b in row["free_binary"]],
        "quota": row["quota"],
        "weights": json.loads(row["weights"]),
        "self_twin": bool(row["self_twin"]),
        "twin": [int(c) for c in row["twin"].split(",")],
    }
