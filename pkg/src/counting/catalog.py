"""Полный каталог P-игр с n игроками и сверка с опубликованными таблицами."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.data.published import PUBLISHED
from src.games.errors import DomainError
from src.games.models import Game, MinHomRepr
from src.games.representations import enumerate_games, game_to_dict, type_to_weights
from src.games.symmetry import is_self_twin, twin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Erratum:
    """Напечатанное представление, которого нет среди вычисленных."""

    n: int
    printed: str
    computed: Optional[str]

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "printed": self.printed, "computed": self.computed}


def build_catalog(n: int) -> Dict[str, object]:
    """Каталог, сгруппированный по h: у каждой игры указан двойник."""
    groups: Dict[int, List[Dict[str, object]]] = {}
    self_twins = 0
    games = 0
    for game in enumerate_games(n):
        entry = game_to_dict(game)
        entry["twin"] = list(twin(game).components)
        groups.setdefault(game.h, []).append(entry)
        games += 1
        self_twins += int(is_self_twin(game))
    return {
        "n": n,
        "games": games,
        "self_twin": self_twins,
        "twin_pairs": (games - self_twins) // 2,
        "by_h": [{"h": h, "games": groups[h]} for h in sorted(groups)],
    }


def parse_printed(text: str) -> Tuple[int, ...]:
    """«(q;w_1,...)» или «(q,w_1,...)» → (q, w_1, ...)."""
    body = text.strip().strip("()").replace(";", ",")
    return tuple(int(part) for part in body.split(","))


def _as_tuple(rep: MinHomRepr) -> Tuple[int, ...]:
    return (rep.quota,) + rep.weights


def find_errata(n: int) -> List[Erratum]:
    """Напечатанные (q; w), не совпадающие ни с одним вычисленным представлением.

    Для каждой опечатки подбирается вычисленное представление с той же квотой,
    которого нет в напечатанной таблице.
    """
    published = PUBLISHED.get(n)
    if published is None:
        raise DomainError(f"для n={n} нет опубликованного каталога")
    computed: Dict[Tuple[int, ...], Game] = {
        _as_tuple(type_to_weights(g.free_type)): g for g in enumerate_games(n)
    }
    printed = {text: parse_printed(text) for text in published.representations}
    unmatched = [key for key in computed if key not in set(printed.values())]

    errata: List[Erratum] = []
    for text, values in printed.items():
        if values in computed:
            continue
        candidate = next((key for key in unmatched if key[0] == values[0]), None)
        correction = None
        if candidate is not None:
            unmatched.remove(candidate)
            correction = str(MinHomRepr(candidate[0], candidate[1:]))
        errata.append(Erratum(n, text, correction))
        logger.warning("Опечатка в каталоге n=%d: напечатано %s, вычислено %s", n, text, correction)
    return errata
