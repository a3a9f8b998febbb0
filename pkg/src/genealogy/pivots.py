"""Треугольники пивотов чётных и нечётных поколений.

Строка поколения — пары (значение, число повторений), отсортированные по
значению; столбец c — позиция в строке, начиная с 1.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, NamedTuple, Tuple

from src.games.errors import DomainError, InvariantViolationError
from src.games.models import ParityClass
from src.genealogy.tree import GenerationLayer, pivot_of

logger = logging.getLogger(__name__)


class GenerationParity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class PivotEntry(NamedTuple):
    value: int
    repetitions: int


class PivotSums(NamedTuple):
    z: int
    y: int
    phi: int


@dataclass(frozen=True)
class PivotTriangle:
    """Строки пивотов по поколениям одной чётности."""

    parity: GenerationParity
    rows: Dict[int, Tuple[PivotEntry, ...]]

    def generations(self) -> Tuple[int, ...]:
        return tuple(sorted(self.rows))

    def cells(self) -> Iterable[Tuple[int, int, PivotEntry]]:
        """(m, c, запись) построчно, c с единицы."""
        for m in self.generations():
            for c, entry in enumerate(self.rows[m], start=1):
                yield m, c, entry


# ── Замкнутые формулы ─────────────────────────────────────────────

def _check_even(m: int, c: int) -> None:
    if m < 0 or m % 2 != 0:
        raise DomainError(f"поколение m={m} должно быть чётным и неотрицательным")
    if not 1 <= c <= m // 2 + 1:
        raise DomainError(f"столбец c={c} вне диапазона 1..{m // 2 + 1} для m={m}")


def even_pivot_value(m: int, c: int) -> int:
    """x_{m,c} = 2c - 1 при c ≤ m/2 и m + 3 в последнем столбце (при m = 0 это 3)."""
    _check_even(m, c)
    if c <= m // 2:
        return 2 * c - 1
    return 2 * c + 1


def even_pivot_reps(m: int, c: int) -> int:
    """r_{m,c} = 2^(m/2 - c) при c ≤ m/2, в последнем столбце 1."""
    _check_even(m, c)
    if c <= m // 2:
        return 2 ** (m // 2 - c)
    return 1


def even_row(m: int) -> Tuple[PivotEntry, ...]:
    return tuple(
        PivotEntry(even_pivot_value(m, c), even_pivot_reps(m, c)) for c in range(1, m // 2 + 2)
    )


def pivot_sums(m: int) -> PivotSums:
    """Z (сумма значений), Y = Z - 2 и Φ (сумма значение·повторения); сверяются с прямым суммированием."""
    row = even_row(m)
    z = sum(entry.value for entry in row)
    phi = sum(entry.value * entry.repetitions for entry in row)
    closed = PivotSums(2 + (m // 2 + 1) ** 2, (m // 2 + 1) ** 2, 3 * 2 ** (m // 2))
    if (z, z - 2, phi) != tuple(closed):
        raise InvariantViolationError(f"суммы пивотов m={m}: {(z, z - 2, phi)} ≠ {tuple(closed)}")
    return closed


def z_step_check(m: int) -> bool:
    """Z(m+2) = Z(m) + (m+3)."""
    return pivot_sums(m + 2).z == pivot_sums(m).z + m + 3


def _check_odd(m_odd: int) -> None:
    if m_odd < 1 or m_odd % 2 != 1:
        raise DomainError(f"поколение m={m_odd} должно быть нечётным ≥ 1")


def odd_pivot_entry(m_odd: int, c: int) -> PivotEntry:
    """Нечётная строка повторяет чётную m-1 со значениями на единицу больше."""
    _check_odd(m_odd)
    return PivotEntry(even_pivot_value(m_odd - 1, c) + 1, even_pivot_reps(m_odd - 1, c))


def odd_row(m_odd: int) -> Tuple[PivotEntry, ...]:
    _check_odd(m_odd)
    return tuple(odd_pivot_entry(m_odd, c) for c in range(1, (m_odd - 1) // 2 + 2))


def psi(m_odd: int) -> int:
    """Ψ(m') = Σ значение·повторения = 4·2^((m'-1)/2); сверяется с прямым суммированием."""
    direct = sum(entry.value * entry.repetitions for entry in odd_row(m_odd))
    closed = 4 * 2 ** ((m_odd - 1) // 2)
    if direct != closed:
        raise InvariantViolationError(f"Ψ({m_odd}): {direct} ≠ {closed}")
    return closed


def _check_max_m(max_m: int) -> None:
    if max_m < 0:
        raise DomainError(f"max_m={max_m} < 0")


def even_pivot_triangle(max_m: int) -> PivotTriangle:
    _check_max_m(max_m)
    return PivotTriangle(
        GenerationParity.EVEN, {m: even_row(m) for m in range(0, max_m + 1, 2)}
    )


def odd_pivot_triangle(max_m: int) -> PivotTriangle:
    _check_max_m(max_m)
    return PivotTriangle(
        GenerationParity.ODD, {m: odd_row(m) for m in range(1, max_m + 1, 2)}
    )


# ── Законы строк ───────────────────────────────────────────────────

def grandchild_law(m: int) -> bool:
    """Строка m+2 = {p+2 с теми же повторениями} ∪ {1 с повторениями 2^(m/2)}."""
    expected = Counter({e.value + 2: e.repetitions for e in even_row(m)})
    expected[1] += 2 ** (m // 2)
    actual = Counter({e.value: e.repetitions for e in even_row(m + 2)})
    return expected == actual


def first_column_law(m: int) -> bool:
    """r_{m+2,1} равно сумме повторений строки m."""
    return even_row(m + 2)[0].repetitions == sum(e.repetitions for e in even_row(m))


def diagonal_law(max_m: int) -> bool:
    """Правые диагонали треугольника повторений постоянны."""
    for m in range(0, max_m + 1, 2):
        for c in range(1, m // 2 + 2):
            reps = even_pivot_reps(m, c)
            step = 1
            while m + 2 * step <= max_m:
                if even_pivot_reps(m + 2 * step, c + step) != reps:
                    return False
                step += 1
    return True


# ── Сбор пивотов с дерева ──────────────────────────────────────────

def _row_from_pivots(pivots: Iterable[int]) -> Tuple[PivotEntry, ...]:
    counts = Counter(pivots)
    return tuple(PivotEntry(value, counts[value]) for value in sorted(counts))


def harvest_pivots(layers: Iterable[GenerationLayer]) -> Tuple[PivotTriangle, PivotTriangle]:
    """Пивоты OSTP-узлов каждого поколения, сгруппированные по значению."""
    even: Dict[int, Tuple[PivotEntry, ...]] = {}
    odd: Dict[int, Tuple[PivotEntry, ...]] = {}
    for layer in layers:
        row = _row_from_pivots(
            pivot_of(node.game) for node in layer.nodes if node.parity_class is ParityClass.OSTP
        )
        (even if layer.m % 2 == 0 else odd)[layer.m] = row
    return PivotTriangle(GenerationParity.EVEN, even), PivotTriangle(GenerationParity.ODD, odd)


def verify_pivots(layers: Iterable[GenerationLayer]) -> None:
    """Собранные с дерева строки совпадают с замкнутыми формулами."""
    even, odd = harvest_pivots(layers)
    for m, row in even.rows.items():
        if row != even_row(m):
            raise InvariantViolationError(f"пивоты m={m}: {row} ≠ {even_row(m)}")
    for m, row in odd.rows.items():
        if row != odd_row(m):
            raise InvariantViolationError(f"пивоты m={m}: {row} ≠ {odd_row(m)}")
    logger.info(
        "Пивоты совпадают с формулами: чётные m=%s, нечётные m=%s",
        even.generations(),
        odd.generations(),
    )
