"""Воспроизведение опубликованных таблиц и каталогов в виде файлов."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List

from src.cli.formatter import format_json, pivots_csv, triangle_csv, tree_to_dict
from src.counting.catalog import build_catalog, find_errata
from src.counting.census import TriangleName, triangle, verify_triangles
from src.games.errors import DomainError
from src.genealogy.pivots import even_pivot_triangle, odd_pivot_triangle, verify_pivots
from src.genealogy.tree import build_tree, verify_tree

logger = logging.getLogger(__name__)

TRIANGLE_MAX_M = 8
EVEN_PIVOTS_MAX_M = 12
ODD_PIVOTS_MAX_M = 9
TREE_MAX_M = 5
CATALOG_SIZES = (8, 9)


def _write(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise DomainError(f"не удалось записать {path}: {exc.strerror}") from exc
    logger.debug("Записан файл %s", path)


def reproduce_paper(out_dir: Path) -> List[Path]:
    """Пишет треугольники, строки пивотов, каталоги n=8/9, дерево до m=5 и errata."""
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DomainError(f"не удалось создать каталог {out_dir}: {exc.strerror}") from exc

    verify_triangles(TRIANGLE_MAX_M)
    files: Dict[str, str] = {}
    for name in (TriangleName.GAMMA, TriangleName.DELTA, TriangleName.THETA):
        files[f"{name.value}.csv"] = triangle_csv(triangle(name, TRIANGLE_MAX_M))

    pivot_layers = build_tree(EVEN_PIVOTS_MAX_M)
    verify_pivots(pivot_layers)
    files["pivots_even.csv"] = pivots_csv(even_pivot_triangle(EVEN_PIVOTS_MAX_M))
    files["pivots_odd.csv"] = pivots_csv(odd_pivot_triangle(ODD_PIVOTS_MAX_M))

    errata = []
    for n in CATALOG_SIZES:
        files[f"catalog_n{n}.json"] = format_json(build_catalog(n))
        errata.extend(e.to_dict() for e in find_errata(n))

    layers = build_tree(TREE_MAX_M)
    verify_tree(layers)
    files[f"tree_m{TREE_MAX_M}.json"] = format_json(tree_to_dict(layers))
    files["errata.json"] = format_json(errata)

    written = []
    for name, text in files.items():
        path = out_dir / name
        _write(path, text)
        written.append(path)
    logger.info("Записано %d файлов в %s", len(written), out_dir)
    return written
