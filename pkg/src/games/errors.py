"""Исключения движка: ошибки ввода, превышение лимитов и нарушения инвариантов."""

from __future__ import annotations


class GameError(Exception):
    """Базовая ошибка движка. exit_code — код завершения CLI."""

    exit_code = 1


class DomainError(GameError, ValueError):
    """Аргумент вне области определения операции."""


class MalformedRepresentationError(DomainError):
    """Представление игры нарушает свои инварианты."""


class ParityError(DomainError):
    """Операция определена только для OSTP-игр (нечётное число компонент)."""


class StructuralError(DomainError):
    """Правило размножения применено к узлу не того поколения или класса."""


class CapacityError(GameError):
    """Превышен лимит перебора (оракул или перечисление)."""

    def __init__(self, what: str, value: int, cap: int) -> None:
        super().__init__(f"{what}: n={value} превышает лимит {cap}")
        self.value = value
        self.cap = cap


class InvariantViolationError(GameError):
    """Внутренняя проверка согласованности не прошла — это ошибка в коде."""

    exit_code = 2
