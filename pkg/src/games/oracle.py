"""Оракул полного перебора: минимальные выигрывающие коалиции и проверка свойств P-игр.

Перебираются все 2^n коалиций, поэтому n ограничен лимитом из конфигурации.
Суммы весов считаются в numpy int64, пока это заведомо безопасно, иначе —
в целых Python (object-массив). Плавающей точки нет нигде.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config import config
from src.games.errors import CapacityError, DomainError
from src.games.models import Game, MinHomRepr
from src.games.representations import type_to_weights

logger = logging.getLogger(__name__)

_INT64_SAFE_TOTAL = 2 ** 62


@dataclass(frozen=True, order=True)
class Coalition:
    """Коалиция как n-битовая маска: бит i-1 соответствует игроку i."""

    mask: int
    n: int = field(compare=False)

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"маска {self.mask} содержит игроков вне 1..{self.n}")

    @classmethod
    def from_members(cls, members: Sequence[int], n: int) -> Coalition:
        mask = 0
        for player in members:
            if not 1 <= player <= n:
                raise DomainError(f"игрок {player} вне диапазона 1..{n}")
            mask |= 1 << (player - 1)
        return cls(mask, n)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.members) + "}"


@dataclass(frozen=True)
class CertificationReport:
    """Результат проверки представления (q; w) оракулом."""

    n: int
    wm_count: int
    homogeneous: bool
    constant_sum: bool
    dummy_free: bool
    wm_list: Tuple[Coalition, ...] = ()

    @property
    def parsimonious(self) -> bool:
        return (
            self.wm_count == self.n
            and self.homogeneous
            and self.constant_sum
            and self.dummy_free
        )

    def to_dict(self, *, emit_wm: bool = False) -> Dict[str, object]:
        data: Dict[str, object] = {
            "n": self.n,
            "wm_count": self.wm_count,
            "homogeneous": self.homogeneous,
            "constant_sum": self.constant_sum,
            "dummy_free": self.dummy_free,
            "parsimonious": self.parsimonious,
        }
        if emit_wm:
            data["wm"] = [c.mask for c in self.wm_list]
        return data


# ── Перебор коалиций ───────────────────────────────────────────────

def _resolve_cap(cap: Optional[int]) -> int:
    return config.oracle_cap if cap is None else cap


def check_cap(n: int, cap: Optional[int] = None) -> None:
    """Бросает CapacityError, если n больше лимита оракула."""
    limit = _resolve_cap(cap)
    if n > limit:
        raise CapacityError("оракул", n, limit)


@lru_cache(maxsize=32)
def _membership(n: int) -> np.ndarray:
    """Матрица 2^n × n: строка — маска, столбец i — входит ли игрок i+1."""
    masks = np.arange(2 ** n, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)


def _subset_sums(weights: Tuple[int, ...]) -> np.ndarray:
    """Веса всех 2^n коалиций, индекс — маска."""
    n = len(weights)
    if sum(weights) < _INT64_SAFE_TOTAL:
        return _membership(n) @ np.array(weights, dtype=np.int64)
    logger.debug("Сумма весов n=%d выходит за int64 — считаем в целых Python", n)
    sums: List[int] = [0] * (2 ** n)
    for mask in range(1, 2 ** n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return np.array(sums, dtype=object)


def _lightest_member_weight(weights: Tuple[int, ...], n: int) -> np.ndarray:
    """Вес самого лёгкого члена коалиции: веса упорядочены, это младший бит маски."""
    first = np.argmax(_membership(n), axis=1)
    dtype = np.int64 if sum(weights) < _INT64_SAFE_TOTAL else object
    return np.array(weights, dtype=dtype)[first]


def is_winning(coalition: Coalition, r: MinHomRepr) -> bool:
    """v(S) = 1 ⇔ w(S) ≥ q."""
    total = sum(w for i, w in enumerate(r.weights) if coalition.mask >> i & 1)
    return total >= r.quota


def _minimal_masks(r: MinHomRepr, *, naive: bool) -> Tuple[np.ndarray, np.ndarray]:
    n = r.n
    sums = _subset_sums(r.weights)
    winning = np.asarray(sums >= r.quota, dtype=bool)
    winning[0] = False
    if naive:
        minimal = winning.copy()
        masks = np.arange(2 ** n, dtype=np.int64)
        members = _membership(n)
        for i in range(n):
            without = masks ^ (1 << i)
            minimal &= ~((members[:, i] == 1) & winning[without])
    else:
        lightest = _lightest_member_weight(r.weights, n)
        minimal = winning & np.asarray(sums - lightest < r.quota, dtype=bool)
    return np.flatnonzero(minimal), sums


def minimal_winning_set(
    r: MinHomRepr,
    *,
    cap: Optional[int] = None,
    naive: bool = False,
) -> Tuple[Coalition, ...]:
    """Все минимальные выигрывающие коалиции по возрастанию маски.

    Без naive коалиция минимальна, если она выигрывает и проигрывает после
    удаления самого лёгкого участника. С naive проверяются все удаления по одному.
    """
    check_cap(r.n, cap)
    indices, _ = _minimal_masks(r, naive=naive)
    return tuple(Coalition(int(mask), r.n) for mask in indices)


def certify(r: MinHomRepr, *, cap: Optional[int] = None) -> CertificationReport:
    """Проверяет однородность, постоянную сумму, отсутствие болванов и число WM."""
    check_cap(r.n, cap)
    n = r.n
    indices, sums = _minimal_masks(r, naive=False)
    winning = np.asarray(sums >= r.quota, dtype=bool)
    # дополнение маски i — это маска 2^n - 1 - i
    constant_sum = bool(np.all(winning != winning[::-1]))
    homogeneous = bool(np.all(sums[indices] == r.quota))
    covered = reduce(lambda acc, mask: acc | int(mask), indices, 0)
    report = CertificationReport(
        n=n,
        wm_count=len(indices),
        homogeneous=homogeneous,
        constant_sum=constant_sum,
        dummy_free=covered == (1 << n) - 1,
        wm_list=tuple(Coalition(int(mask), n) for mask in indices),
    )
    logger.debug("Оракул %s: |WM|=%d, P=%s", r, report.wm_count, report.parsimonious)
    return report


def certify_game(g: Game, *, cap: Optional[int] = None) -> CertificationReport:
    return certify(type_to_weights(g.free_type), cap=cap)


# ── Матрица инцидентности ──────────────────────────────────────────

def incidence_matrix(g: Game, *, cap: Optional[int] = None) -> np.ndarray:
    """Квадратная 0/1-матрица: строка j — j-я минимальная коалиция, столбец i — игрок i."""
    report = certify_game(g, cap=cap)
    if not report.parsimonious:
        raise DomainError(f"игра {g} не парсимониальна: |WM|={report.wm_count}, n={g.n}")
    matrix = np.zeros((g.n, g.n), dtype=np.uint8)
    for row, coalition in enumerate(report.wm_list):
        for player in coalition.members:
            matrix[row, player - 1] = 1
    return matrix


def homogeneous_weights(matrix: np.ndarray) -> Optional[Tuple[int, ...]]:
    """Веса, при которых все строки матрицы имеют одинаковую сумму.

    Решает M·w = 1 точно в рациональных числах и приводит решение к взаимно
    простым целым. None — если матрица вырождена или решение не положительно.
    """
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        return None
    rows = [[Fraction(int(v)) for v in matrix[i]] + [Fraction(1)] for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [v / lead for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    solution = [rows[i][size] for i in range(size)]
    if any(v <= 0 for v in solution):
        return None
    scale = reduce(lambda acc, v: acc * v.denominator // gcd(acc, v.denominator), solution, 1)
    integers = [int(v * scale) for v in solution]
    common = reduce(gcd, integers)
    return tuple(v // common for v in integers)
