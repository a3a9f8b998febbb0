"""Пакетная проверка оракулом: все игры с n игроками, сбои отдельных игр не прерывают прогон."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import List, Optional, Tuple

from src.games.errors import GameError
from src.games.models import FreeBinaryRepr
from src.games.oracle import CertificationReport, certify_game, check_cap
from src.games.representations import enumerate_free_binaries, game_from_free_binary

logger = logging.getLogger(__name__)


@dataclass
class BatchSummary:
    """Итог пакетной проверки."""

    n: int
    games: int = 0
    parsimonious: int = 0
    failures: List[str] = field(default_factory=list)
    reports: List[Tuple[FreeBinaryRepr, CertificationReport]] = field(default_factory=list)

    @property
    def all_parsimonious(self) -> bool:
        return self.games > 0 and self.parsimonious == self.games and not self.failures


def _certify_one(
    task: Tuple[FreeBinaryRepr, Optional[int]],
) -> Tuple[FreeBinaryRepr, Optional[CertificationReport], Optional[str]]:
    fb, cap = task
    game = game_from_free_binary(fb)
    try:
        return fb, certify_game(game, cap=cap), None
    except GameError as exc:
        return fb, None, f"{game}: {exc}"


def certify_all(
    n: int,
    *,
    jobs: int = 1,
    cap: Optional[int] = None,
    keep_reports: bool = False,
) -> BatchSummary:
    """Проверяет каждую игру с n игроками и собирает сводку.

    Лимит оракула проверяется один раз до перебора: CapacityError не
    превращается в сбои отдельных игр.
    """
    check_cap(n, cap)
    summary = BatchSummary(n=n)
    tasks = [(fb, cap) for fb in enumerate_free_binaries(n)]
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            results = pool.map(_certify_one, tasks)
    else:
        results = [_certify_one(task) for task in tasks]

    for fb, report, error in results:
        summary.games += 1
        if error is not None:
            logger.error("Ошибка проверки игры %s: %s", fb, error)
            summary.failures.append(error)
            continue
        if report.parsimonious:
            summary.parsimonious += 1
        else:
            logger.warning("Игра %s не прошла проверку: |WM|=%d", fb, report.wm_count)
        if keep_reports:
            summary.reports.append((fb, report))

    logger.info(
        "Проверка n=%d: %d игр, парсимониальных %d, ошибок %d",
        n,
        summary.games,
        summary.parsimonious,
        len(summary.failures),
    )
    return summary
