"""Точные преобразования между представлениями парсимониальной игры.

Свободный бинарный вектор → полный бинарный → свободный тип → (q; w) и обратно.
Веса считаются рекурсией по типам в целых Python без ограничения разрядности.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from src.config import config
from src.games.errors import CapacityError, DomainError, MalformedRepresentationError
from src.games.models import FreeBinaryRepr, FreeTypeRepr, FullBinaryRepr, Game, MinHomRepr

logger = logging.getLogger(__name__)

MIN_PLAYERS = 4


# ── Бинарные представления ─────────────────────────────────────────

def lift_free_binary(fb: FreeBinaryRepr) -> FullBinaryRepr:
    """Дополняет свободный вектор фиксированными битами: [1,0] ++ fb ++ [0,1]."""
    return FullBinaryRepr((1, 0) + fb.bits + (0, 1))


def drop_to_free(b: FullBinaryRepr) -> FreeBinaryRepr:
    """Отбрасывает четыре фиксированных бита."""
    return FreeBinaryRepr(b.bits[2:-2])


# ── Бинарное ↔ типовое ─────────────────────────────────────────────

def ones_positions_of(b: FullBinaryRepr) -> Tuple[int, ...]:
    """1-based позиции единиц полного бинарного вектора."""
    return tuple(i for i, bit in enumerate(b.bits, start=1) if bit == 1)


def binary_to_type(b: FullBinaryRepr) -> FreeTypeRepr:
    """x_t = I_{t+1} - I_t по позициям единиц; последний x_h = 1 отбрасывается."""
    positions = ones_positions_of(b)
    return FreeTypeRepr(tuple(nxt - cur for cur, nxt in zip(positions, positions[1:])))


def type_to_binary(x: FreeTypeRepr) -> FullBinaryRepr:
    """Единицы в позициях I_t = 1 + Σ_{j<t} x_j; I_h = n получается автоматически."""
    bits = [0] * x.n
    position = 1
    bits[0] = 1
    for count in x.components:
        position += count
        bits[position - 1] = 1
    return FullBinaryRepr(tuple(bits))


# ── Веса ───────────────────────────────────────────────────────────

def type_weights(x: FreeTypeRepr) -> Tuple[int, ...]:
    """Веса типов w_1..w_h по рекурсии w_t = x_{t-1}·w_{t-1} + w_{t-2}.

    Для верхнего типа множитель уменьшается на единицу:
    w_h = (x_{h-1} - 1)·w_{h-1} + w_{h-2}. Начальные условия w_0 = 0, w_1 = 1.
    """
    comps = x.components
    h = x.h
    weights: List[int] = [0, 1]
    for t in range(2, h + 1):
        factor = comps[t - 2]
        if t == h:
            factor -= 1
        weights.append(factor * weights[t - 1] + weights[t - 2])
    return tuple(weights[1:])


def type_to_weights(x: FreeTypeRepr) -> MinHomRepr:
    """Минимальное однородное представление: тип t повторяется x_t раз, x_h = 1."""
    individual: List[int] = []
    for count, weight in zip(x.full, type_weights(x)):
        individual.extend([weight] * count)
    quota = (1 + sum(individual)) // 2
    return MinHomRepr(quota, tuple(individual))


def weights_to_binary(r: MinHomRepr) -> FullBinaryRepr:
    """b_1 = 1, b_i = 1 тогда и только тогда, когда w_i > w_{i-1}."""
    bits = (1,) + tuple(int(b > a) for a, b in zip(r.weights, r.weights[1:]))
    return FullBinaryRepr(bits)


def weights_to_type(r: MinHomRepr) -> FreeTypeRepr:
    """Число игроков каждого веса; последний (обязательно 1) отбрасывается."""
    counts = [len(list(group)) for _, group in itertools.groupby(r.weights)]
    if counts[-1] != 1:
        raise MalformedRepresentationError(
            f"веса {r.weights}: верхний тип должен состоять из одного игрока"
        )
    return FreeTypeRepr(tuple(counts[:-1]))


# ── Перечисление ───────────────────────────────────────────────────

def _check_n(n: int) -> int:
    if n < MIN_PLAYERS:
        raise DomainError(f"число игроков n={n} меньше {MIN_PLAYERS}")
    return n - MIN_PLAYERS


def check_enumeration_cap(n: int, cap: Optional[int] = None) -> int:
    """Проверяет n против лимита перебора 2^(n-4) игр и возвращает m = n - 4."""
    m = _check_n(n)
    limit = config.enumeration_cap if cap is None else cap
    if n > limit:
        raise CapacityError("перебор", n, limit)
    return m


def free_binary_from_index(index: int, m: int) -> FreeBinaryRepr:
    """index-й (с нуля) свободный вектор длины m в лексикографическом порядке."""
    if not 0 <= index < 2 ** m:
        raise DomainError(f"индекс {index} вне диапазона [0, 2^{m})")
    return FreeBinaryRepr(tuple((index >> (m - 1 - i)) & 1 for i in range(m)))


def enumerate_free_binaries(
    n: int,
    *,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[FreeBinaryRepr]:
    """Все 2^(n-4) свободных векторов ровно по одному разу, лексикографически.

    start/stop ограничивают диапазон индексов, чтобы части перебора можно было
    обрабатывать независимо.
    """
    m = _check_n(n)
    total = 2 ** m
    stop = total if stop is None else min(stop, total)
    if start == 0 and stop == total:
        for bits in itertools.product((0, 1), repeat=m):
            yield FreeBinaryRepr(bits)
        return
    for index in range(max(start, 0), stop):
        yield free_binary_from_index(index, m)


def enumerate_games(n: int) -> Iterator[Game]:
    """Все парсимониальные игры с n игроками в порядке свободных бинарных векторов."""
    for fb in enumerate_free_binaries(n):
        yield game_from_free_binary(fb)


# ── Игра и её JSON ─────────────────────────────────────────────────

def game_from_free_type(x: FreeTypeRepr) -> Game:
    return Game(x)


def game_from_free_binary(fb: FreeBinaryRepr) -> Game:
    return Game(binary_to_type(lift_free_binary(fb)))


def free_binary_of(g: Game) -> FreeBinaryRepr:
    return drop_to_free(type_to_binary(g.free_type))


def game_to_dict(g: Game) -> Dict[str, object]:
    """JSON-объект игры; квота и веса — десятичные строки."""
    rep = type_to_weights(g.free_type)
    components = g.components
    return {
        "n": g.n,
        "h": g.h,
        "free_type": list(components),
        "free_binary": list(free_binary_of(g).bits),
        "quota": str(rep.quota),
        "weights": [str(w) for w in rep.weights],
        "self_twin": components == components[::-1],
    }
