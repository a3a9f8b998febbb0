"""Двойственность (twin) и двусторонняя симметрия парсимониальных игр."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.games.errors import MalformedRepresentationError
from src.games.models import FreeBinaryRepr, FreeTypeRepr, FullBinaryRepr, Game
from src.games.oracle import homogeneous_weights, incidence_matrix
from src.games.representations import (
    enumerate_free_binaries,
    game_from_free_binary,
    ones_positions_of,
    type_to_weights,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OnesPositions:
    """Позиции единиц I_1 < ... < I_h полного бинарного вектора, I_1 = 1, I_h = n."""

    positions: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        pos = tuple(self.positions)
        object.__setattr__(self, "positions", pos)
        if len(pos) < 2 or pos[0] != 1 or pos[-1] != self.n:
            raise MalformedRepresentationError(
                f"позиции единиц {pos}: нужно I_1 = 1 и I_h = n = {self.n}"
            )
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise MalformedRepresentationError(f"позиции единиц {pos} не возрастают")

    @property
    def h(self) -> int:
        return len(self.positions)


def twin(g: Game) -> Game:
    """Двойник: свободный тип в обратном порядке. Инволюция, n и h сохраняются."""
    return Game(FreeTypeRepr(g.components[::-1]))


def twin_binary(fb: FreeBinaryRepr) -> FreeBinaryRepr:
    return FreeBinaryRepr(fb.bits[::-1])


def is_self_twin(g: Game) -> bool:
    """Свободный тип — палиндром."""
    return g.components == g.components[::-1]


def is_self_twin_binary(fb: FreeBinaryRepr) -> bool:
    """Свободный бинарный вектор — палиндром."""
    return fb.bits == fb.bits[::-1]


def ones_positions(b: FullBinaryRepr) -> OnesPositions:
    return OnesPositions(ones_positions_of(b), b.n)


def symmetry_positions_check(ones: OnesPositions, n: int) -> bool:
    """I_t + I_{h+1-t} = n + 1 для всех t."""
    pos = ones.positions
    return all(a + b == n + 1 for a, b in zip(pos, reversed(pos)))


def twin_quota_check(g: Game) -> bool:
    """Двойники имеют одну и ту же минимальную квоту."""
    return type_to_weights(g.free_type).quota == type_to_weights(twin(g).free_type).quota


# ── Транспонирование матрицы инцидентности ────────────────────────

def _canonical(matrix: np.ndarray, column_weights: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Столбцы по возрастанию веса, затем строки лексикографически.

    Перестановка игроков одного веса переводит множество строк P-игры в себя,
    поэтому результат не зависит от порядка внутри группы равных весов.
    """
    order = sorted(range(len(column_weights)), key=lambda i: column_weights[i])
    reordered = matrix[:, order]
    return sorted(tuple(int(v) for v in row) for row in reordered)


def twin_transpose_check(g: Game, *, cap: Optional[int] = None) -> bool:
    """Mᵀ игры совпадает с матрицей двойника с точностью до допустимых перестановок.

    Веса столбцов Mᵀ восстанавливаются из самой матрицы и должны совпасть с
    весами двойника; затем сравниваются канонические формы.
    """
    dual = twin(g)
    transposed = incidence_matrix(g, cap=cap).T
    twin_matrix = incidence_matrix(dual, cap=cap)
    twin_weights = type_to_weights(dual.free_type).weights

    derived = homogeneous_weights(transposed)
    if derived is None:
        logger.warning("Mᵀ игры %s вырождена — сравнение невозможно", g)
        return False
    if tuple(sorted(derived)) != twin_weights:
        logger.debug("Веса Mᵀ игры %s: %s ≠ %s", g, derived, twin_weights)
        return False
    return _canonical(transposed, derived) == _canonical(twin_matrix, twin_weights)


def twin_pairs(n: int) -> List[Tuple[Game, Game]]:
    """Пары неидентичных двойников при n игроках, каждая один раз.

    Первым идёт член пары с лексикографически меньшим свободным бинарным вектором.
    """
    pairs: List[Tuple[Game, Game]] = []
    for fb in enumerate_free_binaries(n):
        mirrored = twin_binary(fb)
        if fb.bits < mirrored.bits:
            pairs.append((game_from_free_binary(fb), game_from_free_binary(mirrored)))
    return pairs
