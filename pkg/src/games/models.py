"""Модели данных: три представления парсимониальной игры и сама игра.

Все индексы в документации 1-based, хранение — обычные кортежи Python (0-based).
Переход между ними выполняется только в `src.games.representations`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from src.games.errors import MalformedRepresentationError


class ParityClass(str, Enum):
    """Класс самодвойственной игры по числу компонент свободного типа."""

    OSTP = "OSTP"
    ESTP = "ESTP"

    @classmethod
    def label(cls, value: str) -> str:
        """Человекочитаемое название класса."""
        labels: Dict[str, str] = {
            cls.OSTP.value: "нечётная (есть пивот)",
            cls.ESTP.value: "чётная (без пивота)",
        }
        return labels.get(value, value)

    @classmethod
    def of_components(cls, count: int) -> ParityClass:
        """OSTP при нечётном числе компонент h-1, иначе ESTP."""
        return cls.OSTP if count % 2 == 1 else cls.ESTP


def _parse_int_list(text: str, what: str) -> Tuple[int, ...]:
    """Разбирает строку вида «2,2,1,3» в кортеж целых."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise MalformedRepresentationError(f"{what}: пустая компонента в «{text}»")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise MalformedRepresentationError(f"{what}: не целое число в «{text}»") from None


def _check_bits(bits: Tuple[int, ...], what: str) -> None:
    for bit in bits:
        if bit not in (0, 1):
            raise MalformedRepresentationError(f"{what}: бит {bit!r} не равен 0 или 1")


@dataclass(frozen=True)
class FreeBinaryRepr:
    """Свободное бинарное представление: n-4 внутренних бита, ограничений нет."""

    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))
        _check_bits(self.bits, "свободный бинарный вектор")

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def n(self) -> int:
        return len(self.bits) + 4

    @classmethod
    def parse(cls, text: str) -> FreeBinaryRepr:
        """Строка из 0/1 («10110»); пустая строка — игра с n=4."""
        cleaned = text.strip()
        if any(ch not in "01" for ch in cleaned):
            raise MalformedRepresentationError(
                f"свободный бинарный вектор: допустимы только 0 и 1, получено «{text}»"
            )
        return cls(tuple(int(ch) for ch in cleaned))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class FullBinaryRepr:
    """Полное бинарное представление длины n: b_1=1, b_2=0, b_{n-1}=0, b_n=1."""

    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        _check_bits(bits, "бинарный вектор")
        if len(bits) < 4:
            raise MalformedRepresentationError(
                f"бинарный вектор: длина {len(bits)} меньше 4"
            )
        if bits[0] != 1 or bits[1] != 0 or bits[-2] != 0 or bits[-1] != 1:
            raise MalformedRepresentationError(
                f"бинарный вектор {bits}: нарушены фиксированные биты 1,0,...,0,1"
            )

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def h(self) -> int:
        return sum(self.bits)

    @classmethod
    def parse(cls, text: str) -> FullBinaryRepr:
        cleaned = text.strip()
        if not cleaned or any(ch not in "01" for ch in cleaned):
            raise MalformedRepresentationError(
                f"бинарный вектор: допустимы только 0 и 1, получено «{text}»"
            )
        return cls(tuple(int(ch) for ch in cleaned))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class FreeTypeRepr:
    """Свободное типовое представление (x_1..x_{h-1}); x_h = 1 подразумевается."""

    components: Tuple[int, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise MalformedRepresentationError("свободный тип: нет компонент")
        if any(not isinstance(x, int) or x < 1 for x in comps):
            raise MalformedRepresentationError(
                f"свободный тип {comps}: все компоненты должны быть целыми ≥ 1"
            )
        if len(comps) == 1:
            if comps[0] < 3:
                raise MalformedRepresentationError(
                    f"свободный тип {comps}: при h=2 нужно x_1 = n-1 ≥ 3"
                )
        elif comps[0] < 2 or comps[-1] < 2:
            raise MalformedRepresentationError(
                f"свободный тип {comps}: нужно x_1 ≥ 2 и x_(h-1) ≥ 2"
            )

    @property
    def h(self) -> int:
        return len(self.components) + 1

    @property
    def n(self) -> int:
        return 1 + sum(self.components)

    @property
    def full(self) -> Tuple[int, ...]:
        """Полный вектор типов с x_h = 1."""
        return self.components + (1,)

    @classmethod
    def parse(cls, text: str) -> FreeTypeRepr:
        return cls(_parse_int_list(text, "свободный тип"))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.components) + ")"


@dataclass(frozen=True)
class MinHomRepr:
    """Минимальное однородное представление (q; w_1..w_n), точные целые."""

    quota: int
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise MalformedRepresentationError("веса: пустой вектор")
        if weights[0] != 1:
            raise MalformedRepresentationError(f"веса {weights}: нужно w_1 = 1")
        if any(b < a for a, b in zip(weights, weights[1:])):
            raise MalformedRepresentationError(f"веса {weights}: вектор не неубывающий")
        total = sum(weights)
        if total % 2 == 0:
            raise MalformedRepresentationError(f"веса {weights}: сумма {total} чётная")
        if self.quota != (total + 1) // 2:
            raise MalformedRepresentationError(
                f"квота {self.quota} не равна (1 + Σw)/2 = {(total + 1) // 2}"
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def parse(cls, text: str) -> MinHomRepr:
        """Строка «q,w_1,...,w_n» (квота первой)."""
        values = _parse_int_list(text, "представление (q; w)")
        if len(values) < 2:
            raise MalformedRepresentationError("представление (q; w): нужны квота и веса")
        return cls(values[0], values[1:])

    def __str__(self) -> str:
        return f"({self.quota};" + ",".join(str(w) for w in self.weights) + ")"


@dataclass(frozen=True)
class Game:
    """Парсимониальная игра; каноническая идентичность — свободный тип."""

    free_type: FreeTypeRepr

    @property
    def n(self) -> int:
        return self.free_type.n

    @property
    def h(self) -> int:
        return self.free_type.h

    @property
    def m(self) -> int:
        return self.n - 4

    @property
    def k(self) -> int:
        return self.h - 2

    @property
    def components(self) -> Tuple[int, ...]:
        return self.free_type.components

    def __str__(self) -> str:
        return str(self.free_type)
