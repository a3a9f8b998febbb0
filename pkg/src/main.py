"""Точка входа: CLI движка парсимониальных игр."""

from __future__ import annotations

import logging
import sys

from src.cli.commands import run
from src.config import config

logger = logging.getLogger(__name__)


def main() -> None:
    """Точка входа для запуска из CLI. Логи идут в stderr, результаты — в stdout."""
    logging.basicConfig(
        level=config.log_level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
