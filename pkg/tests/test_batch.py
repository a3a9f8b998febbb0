"""Тесты пакетной проверки оракулом."""

from __future__ import annotations

import logging
from unittest.mock import patch

import pytest

from src.batch.certify import certify_all
from src.games.errors import CapacityError, DomainError


def test_certify_all_serial() -> None:
    summary = certify_all(9, keep_reports=True)
    assert summary.games == 32
    assert summary.parsimonious == 32
    assert summary.all_parsimonious
    assert len(summary.reports) == 32
    assert str(summary.reports[0][0]) == "00000"


def test_certify_all_parallel_matches_serial() -> None:
    serial = certify_all(10)
    parallel = certify_all(10, jobs=2)
    assert (parallel.games, parallel.parsimonious) == (serial.games, serial.parsimonious)
    assert parallel.reports == []


def test_certify_all_collects_failures(caplog: pytest.LogCaptureFixture) -> None:
    """Ошибка одной игры не прерывает прогон, а попадает в сводку."""
    with patch(
        "src.batch.certify.certify_game", side_effect=DomainError("битая игра")
    ), caplog.at_level(logging.ERROR):
        summary = certify_all(8)
    assert summary.games == 16
    assert summary.parsimonious == 0
    assert len(summary.failures) == 16
    assert not summary.all_parsimonious
    assert "битая игра" in summary.failures[0]
    assert "Ошибка проверки" in caplog.text


def test_certify_all_checks_cap_before_enumeration() -> None:
    with patch("src.batch.certify.enumerate_free_binaries") as enumerate_mock:
        with pytest.raises(CapacityError, match="лимит 8"):
            certify_all(9, cap=8)
    enumerate_mock.assert_not_called()
