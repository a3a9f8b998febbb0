"""Опубликованные каталоги P-игр при n = 8 и n = 9 (в том виде, как они напечатаны).

Используются для сверки вычисленных каталогов: расхождения попадают в errata.
Записи хранятся строками, чтобы опечатки сохранялись дословно.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True)
class PublishedCatalog:
    """Напечатанный каталог одной строки m."""

    n: int
    self_twins: Tuple[Tuple[int, ...], ...]
    twin_pairs: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    representations: Tuple[str, ...]


CATALOG_N8 = PublishedCatalog(
    n=8,
    self_twins=((7,), (2, 3, 2), (3, 1, 3), (2, 1, 1, 1, 2)),
    twin_pairs=(
        ((3, 4), (4, 3)),
        ((2, 5), (5, 2)),
        ((2, 1, 4), (4, 1, 2)),
        ((2, 2, 3), (3, 2, 2)),
        ((2, 1, 2, 2), (2, 2, 1, 2)),
        ((2, 1, 1, 3), (3, 1, 1, 2)),
    ),
    representations=(
        "(7;1,1,1,1,1,1,1,6)",
        "(13;1,1,1,3,3,3,3,10)",
        "(13;1,1,1,1,4,4,4,9)",
        "(11;1,1,2,2,2,2,2,9)",
        "(11;1,1,1,1,1,5,5,6)",
        "(16;1,1,2,2,2,7,7,9)",
        "(15;1,1,1,3,4,4,4,11)",
        "(14;1,1,2,3,3,3,3,11)",
        "(14;1,1,1,1,4,5,5,9)",
        "(17;1,1,2,2,5,5,5,12)",
        "(17;1,1,1,3,3,7,7,10)",
        "(19;1,1,2,3,3,8,8,11)",
        "(19;1,1,2,2,5,7,7,12)",
        "(18;1,1,2,3,5,5,5,13)",
        "(18;1,1,1,3,4,7,7,11)",
        "(21;1,1,2,3,5,8,8,13)",
    ),
)

CATALOG_N9 = PublishedCatalog(
    n=9,
    self_twins=(
        (8,),
        (4, 4),
        (2, 4, 2),
        (3, 2, 3),
        (2, 2, 2, 2),
        (3, 1, 1, 3),
        (2, 1, 2, 1, 2),
        (2, 1, 1, 1, 1, 2),
    ),
    twin_pairs=(
        ((3, 5), (5, 3)),
        ((2, 6), (6, 2)),
        ((2, 1, 5), (5, 1, 2)),
        ((2, 2, 4), (4, 2, 2)),
        ((2, 3, 3), (3, 3, 2)),
        ((3, 1, 4), (4, 1, 3)),
        ((2, 1, 1, 4), (4, 1, 1, 2)),
        ((2, 1, 2, 3), (3, 2, 1, 2)),
        ((2, 1, 3, 2), (2, 3, 1, 2)),
        ((3, 1, 2, 2), (2, 2, 1, 3)),
        ((2, 1, 1, 2, 2), (2, 2, 1, 1, 2)),
        ((2, 1, 1, 1, 3), (3, 1, 1, 1, 2)),
    ),
    representations=(
        "(8;1,1,1,1,1,1,1,1,7)",
        "(17;1,1,1,1,4,4,4,4,13)",
        "(16;1,1,1,3,3,3,3,3,13)",
        "(16;1,1,1,1,1,5,5,5,11)",
        "(13;1,1,2,2,2,2,2,2,11)",
        "(13;1,1,1,1,1,1,6,6,7)",
        "(20;1,1,2,2,2,2,9,9,11)",
        "(24;1,1,1,3,3,7,7,7,17)",
        "(17;1,1,2,3,3,3,3,3,14)",
        "(17;1,1,1,1,1,5,6,6,11)",
        "(22;1,1,2,2,5,5,5,5,17)",
        "(22;1,1,1,1,4,4,9,9,13)",
        "(23;1,1,2,2,2,7,7,7,16)",
        "(23;1,1,1,3,3,3,10,10,13)",
        "(19;1,1,1,3,4,4,4,4,15)",
        "(19;1,1,1,1,4,5,5,5,14)",
        "(29;1,1,2,2,5,5,12,12,17)",
        "(25;1,1,1,3,4,7,7,7,18)",
        "(23;1,1,2,3,5,5,5,5,18)",
        "(23;1,1,1,1,4,5,9,9,14)",
        "(27,1,1,2,3,3,8,8,8,19)",
        "(27;11,1,1,3,3,7,10,10,17)",
        "(25;1,1,2,3,3,3,11,11,14)",
        "(25;1,1,2,2,2,7,9,9,16)",
        "(26;1,1,1,3,4,4,11,11,15)",
        "(26;1,1,2,2,5,7,7,7,19)",
        "(30;1,1,2,3,3,8,11,11,19)",
        "(31;1,1,2,3,5,5,13,13,18)",
        "(31;1,1,2,2,5,7,12,12,19)",
        "(29;1,1,2,3,5,8,8,8,21)",
        "(29;1,1,1,3,4,7,11,11,18)",
        "(34;1,1,2,3,5,8,13,13,21)",
    ),
)

PUBLISHED: Dict[int, PublishedCatalog] = {c.n: c for c in (CATALOG_N8, CATALOG_N9)}
