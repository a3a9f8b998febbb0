"""Треугольники C, Γ, Δ, Θ: замкнутые формулы, рекуррентности и прямой перебор.

Каждый треугольник считается независимыми способами, расхождение — это
InvariantViolationError. Биномиальные коэффициенты строятся аддитивно
(треугольник Паскаля), без факториалов и деления.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Tuple

from src.games.errors import DomainError, InvariantViolationError
from src.games.models import FreeTypeRepr, Game, MinHomRepr
from src.games.representations import (
    MIN_PLAYERS,
    check_enumeration_cap,
    enumerate_free_binaries,
    game_from_free_binary,
    type_to_weights,
)
from src.games.symmetry import is_self_twin, twin, twin_binary

logger = logging.getLogger(__name__)


class TriangleName(str, Enum):
    """Семейство треугольника."""

    C = "c"
    GAMMA = "gamma"
    DELTA = "delta"
    THETA = "theta"

    @classmethod
    def label(cls, value: str) -> str:
        labels: Dict[str, str] = {
            cls.C.value: "C — все P-игры",
            cls.GAMMA.value: "Γ — самодвойственные P-игры",
            cls.DELTA.value: "Δ — несамодвойственные P-игры",
            cls.THETA.value: "Θ — пары неидентичных двойников",
        }
        return labels.get(value, value)


@dataclass(frozen=True)
class Triangle:
    """Плотный нижнетреугольный массив точных целых: rows[m][k], k = 0..m."""

    name: TriangleName
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def max_m(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, index: Tuple[int, int]) -> int:
        m, k = index
        return self.rows[m][k]

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """(m, k, значение) построчно."""
        for m, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield m, k, value


@dataclass(frozen=True)
class CensusRow:
    """Наблюдаемая строка m = n - 4: по каждому k — все игры, самодвойственные, пары."""

    m: int
    c: Tuple[int, ...]
    gamma: Tuple[int, ...]
    theta: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.m + MIN_PLAYERS


def _check_range(m: int, k: int) -> None:
    if m < 0 or not 0 <= k <= m:
        raise DomainError(f"индексы (m={m}, k={k}) вне треугольника 0 ≤ k ≤ m")


# ── C: классический треугольник Паскаля ───────────────────────────

@lru_cache(maxsize=None)
def _pascal_row(m: int) -> Tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _pascal_row(m - 1)
    return (1,) + tuple(a + b for a, b in zip(prev, prev[1:])) + (1,)


def _binomial(m: int, k: int) -> int:
    if k < 0 or k > m:
        return 0
    return _pascal_row(m)[k]


def c_count(m: int, k: int) -> int:
    """Число P-игр с n = m+4 игроками и h = k+2 типами: C(m, k)."""
    _check_range(m, k)
    return _binomial(m, k)


def c_triangle(max_m: int) -> Triangle:
    return Triangle(TriangleName.C, tuple(_pascal_row(m) for m in range(max_m + 1)))


# ── Γ: самодвойственные игры ──────────────────────────────────────

def gamma_total(m: int) -> int:
    """Γ(m): 2^(m/2) при чётном m, 2^((m+1)/2) при нечётном."""
    if m < 0:
        raise DomainError(f"m={m} < 0")
    return 2 ** (m // 2) if m % 2 == 0 else 2 ** ((m + 1) // 2)


def gamma_closed(m: int, k: int) -> int:
    """Замкнутая формула Γ(m, k) по четностям m и k."""
    _check_range(m, k)
    if m % 2 == 0:
        return _binomial(m // 2, k // 2) if k % 2 == 0 else 0
    if k % 2 == 0:
        return _binomial((m - 1) // 2, k // 2)
    return _binomial((m - 1) // 2, (k - 1) // 2)


def gamma_closed_triangle(max_m: int) -> Triangle:
    rows = tuple(tuple(gamma_closed(m, k) for k in range(m + 1)) for m in range(max_m + 1))
    return Triangle(TriangleName.GAMMA, rows)


def gamma_recurrence(max_m: int) -> Triangle:
    """Модифицированный треугольник Паскаля для Γ.

    Края равны 1; внутри сумма соседей предыдущей строки при чётном m+k и
    разность Γ(m-1,k) - Γ(m-1,k-1) при нечётном.
    """
    rows: List[Tuple[int, ...]] = [(1,)]
    for m in range(1, max_m + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, m):
            if (m + k) % 2 == 0:
                row.append(prev[k] + prev[k - 1])
            else:
                row.append(prev[k] - prev[k - 1])
        row.append(1)
        rows.append(tuple(row))
    return Triangle(TriangleName.GAMMA, tuple(rows[: max_m + 1]))


# ── Δ и Θ ──────────────────────────────────────────────────────────

def _delta_recurrence(max_m: int, gamma: Triangle) -> Triangle:
    rows: List[Tuple[int, ...]] = [(0,)]
    for m in range(1, max_m + 1):
        prev = rows[-1]
        row = [0]
        for k in range(1, m):
            value = prev[k] + prev[k - 1]
            if (m + k) % 2 == 1:
                value += 2 * gamma[m - 1, k - 1]
            row.append(value)
        row.append(0)
        rows.append(tuple(row))
    return Triangle(TriangleName.DELTA, tuple(rows[: max_m + 1]))


def delta_theta(max_m: int) -> Tuple[Triangle, Triangle]:
    """Δ = C - Γ (вычитанием и по рекуррентности, обе сверяются) и Θ = Δ/2."""
    gamma = gamma_recurrence(max_m)
    c = c_triangle(max_m)
    by_subtraction = Triangle(
        TriangleName.DELTA,
        tuple(
            tuple(a - b for a, b in zip(c_row, g_row))
            for c_row, g_row in zip(c.rows, gamma.rows)
        ),
    )
    by_recurrence = _delta_recurrence(max_m, gamma)
    if by_subtraction.rows != by_recurrence.rows:
        raise InvariantViolationError("Δ: рекуррентность расходится с C - Γ")
    odd = [(m, k) for m, k, value in by_subtraction.cells() if value % 2]
    if odd:
        raise InvariantViolationError(f"Δ: нечётные элементы в ячейках {odd}")
    theta = Triangle(
        TriangleName.THETA,
        tuple(tuple(value // 2 for value in row) for row in by_subtraction.rows),
    )
    return by_subtraction, theta


def triangle(name: TriangleName, max_m: int) -> Triangle:
    """Треугольник по имени (для CLI и экспорта)."""
    if max_m < 0:
        raise DomainError(f"max_m={max_m} < 0")
    if name is TriangleName.C:
        return c_triangle(max_m)
    if name is TriangleName.GAMMA:
        return gamma_recurrence(max_m)
    delta, theta = delta_theta(max_m)
    return delta if name is TriangleName.DELTA else theta


# ── Прямой перебор ────────────────────────────────────────────────

def _classify_range(task: Tuple[int, int, int]) -> Tuple[List[int], List[int], List[int]]:
    """Счётчики (все, самодвойственные, пары двойников) по k для индексов [start, stop).

    Пара засчитывается члену с лексикографически меньшим вектором, поэтому
    каждая пара попадает ровно в один диапазон.
    """
    n, start, stop = task
    m = n - MIN_PLAYERS
    total = [0] * (m + 1)
    self_twin = [0] * (m + 1)
    pairs = [0] * (m + 1)
    for fb in enumerate_free_binaries(n, start=start, stop=stop):
        game = game_from_free_binary(fb)
        total[game.k] += 1
        if is_self_twin(game):
            self_twin[game.k] += 1
        elif fb.bits < twin_binary(fb).bits:
            pairs[twin(game).k] += 1
    return total, self_twin, pairs


def _partitions(total: int, jobs: int) -> List[Tuple[int, int]]:
    step = -(-total // jobs)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def census_by_enumeration(
    n: int,
    *,
    jobs: int = 1,
    cap: Optional[int] = None,
) -> CensusRow:
    """Перебирает все 2^(n-4) игр и считает по k все игры, самодвойственные и пары двойников."""
    m = check_enumeration_cap(n, cap)
    tasks = [(n, lo, hi) for lo, hi in _partitions(2 ** m, max(jobs, 1))]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            results = pool.map(_classify_range, tasks)
    else:
        results = [_classify_range(task) for task in tasks]

    total = [0] * (m + 1)
    self_twin = [0] * (m + 1)
    pairs = [0] * (m + 1)
    for part_total, part_self, part_pairs in results:
        total = [a + b for a, b in zip(total, part_total)]
        self_twin = [a + b for a, b in zip(self_twin, part_self)]
        pairs = [a + b for a, b in zip(pairs, part_pairs)]
    for k, (t, s, p) in enumerate(zip(total, self_twin, pairs)):
        if t - s != 2 * p:
            raise InvariantViolationError(
                f"перебор n={n}, k={k}: несамодвойственных {t - s}, а пар двойников {p}"
            )
    logger.info("Перебор n=%d: %d игр, из них %d самодвойственных", n, sum(total), sum(self_twin))
    return CensusRow(m=m, c=tuple(total), gamma=tuple(self_twin), theta=tuple(pairs))


def verify_triangles(max_m: int, *, enumeration_max_m: int = 12, jobs: int = 1) -> None:
    """Сверяет замкнутые формулы, рекуррентности и перебор; бросает при расхождении."""
    closed = gamma_closed_triangle(max_m)
    recurrent = gamma_recurrence(max_m)
    if closed.rows != recurrent.rows:
        raise InvariantViolationError("Γ: замкнутая формула расходится с рекуррентностью")
    for m in range(max_m + 1):
        if sum(closed.rows[m]) != gamma_total(m):
            raise InvariantViolationError(f"Γ: сумма строки m={m} не равна Γ(m)")
    if c_triangle(max_m).row_sums() != tuple(2 ** m for m in range(max_m + 1)):
        raise InvariantViolationError("C: суммы строк не равны 2^m")
    _, theta = delta_theta(max_m)
    for m in range(min(max_m, enumeration_max_m) + 1):
        row = census_by_enumeration(m + MIN_PLAYERS, jobs=jobs)
        if row.c != _pascal_row(m) or row.gamma != closed.rows[m] or row.theta != theta.rows[m]:
            raise InvariantViolationError(f"перебор при m={m} расходится с треугольниками")
    logger.info("Треугольники согласованы до m=%d (перебор до m=%d)", max_m, min(max_m, enumeration_max_m))


# ── Граничные игры ────────────────────────────────────────────────

def fibonacci(i: int) -> int:
    """f_1 = f_2 = 1."""
    if i < 1:
        raise DomainError(f"номер числа Фибоначчи {i} < 1")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def apex_game(n: int) -> Game:
    """Единственная P-игра с h = 2: свободный тип (n-1)."""
    if n < MIN_PLAYERS:
        raise DomainError(f"число игроков n={n} меньше {MIN_PLAYERS}")
    return Game(FreeTypeRepr((n - 1,)))


def fibonacci_game(n: int) -> Game:
    """Единственная P-игра с h = n-2: свободный тип (2,1,...,1,2)."""
    if n < MIN_PLAYERS:
        raise DomainError(f"число игроков n={n} меньше {MIN_PLAYERS}")
    if n == MIN_PLAYERS:
        return apex_game(n)
    return Game(FreeTypeRepr((2,) + (1,) * (n - 5) + (2,)))


def fibonacci_weights(n: int) -> MinHomRepr:
    """Веса игры Фибоначчи: w_i = f_i для i ≤ n-2, w_{n-1} = f_{n-2}, w_n = f_{n-1}."""
    weights = [fibonacci(i) for i in range(1, n - 1)] + [fibonacci(n - 2), fibonacci(n - 1)]
    return MinHomRepr((1 + sum(weights)) // 2, tuple(weights))


def fibonacci_game_matches(n: int) -> bool:
    """Формула весов совпадает с рекурсией по типам для игры Фибоначчи."""
    return type_to_weights(fibonacci_game(n).free_type) == fibonacci_weights(n)
