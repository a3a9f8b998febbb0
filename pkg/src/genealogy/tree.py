"""Генеалогическое дерево самодвойственных игр.

Поколение m содержит все самодвойственные игры с n = m + 4. Узел чётного
поколения даёт двух детей (пивот + 1 и расщеплённый пивот), узел нечётного —
одного (пивот + 1 либо вставка центральной единицы).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Iterator, List, Optional, Set, Tuple

from src.games.errors import DomainError, InvariantViolationError, ParityError, StructuralError
from src.games.models import FreeTypeRepr, Game, ParityClass
from src.games.representations import MIN_PLAYERS, enumerate_games, game_from_free_type
from src.games.symmetry import is_self_twin
from src.counting.census import gamma_total

logger = logging.getLogger(__name__)

SEED_COMPONENTS = (3,)


@dataclass(frozen=True)
class TreeNode:
    """Самодвойственная игра в дереве. parent_index и children — индексы в соседних слоях."""

    game: Game
    generation: int
    parity_class: ParityClass
    pivot_value: Optional[int] = None
    parent_index: Optional[int] = None
    children: Tuple[int, ...] = ()


@dataclass(frozen=True)
class GenerationLayer:
    """Поколение m дерева."""

    m: int
    nodes: Tuple[TreeNode, ...]

    def games(self) -> Set[Tuple[int, ...]]:
        return {node.game.components for node in self.nodes}


# ── Пивот ──────────────────────────────────────────────────────────

def pivot_of(g: Game) -> int:
    """Центральная компонента x_{h/2} свободного типа OSTP-игры."""
    comps = g.components
    if len(comps) % 2 == 0:
        raise ParityError(f"игра {g}: чётное число компонент, пивота нет")
    return comps[len(comps) // 2]


def _make_node(
    components: Tuple[int, ...],
    generation: int,
    parent_index: Optional[int],
) -> TreeNode:
    game = game_from_free_type(FreeTypeRepr(components))
    parity = ParityClass.of_components(len(components))
    pivot = pivot_of(game) if parity is ParityClass.OSTP else None
    return TreeNode(game, generation, parity, pivot, parent_index)


def seed() -> TreeNode:
    """Игра «Адам» (3) — единственная P-игра с четырьмя игроками."""
    return _make_node(SEED_COMPONENTS, 0, None)


# ── Правила размножения ───────────────────────────────────────────

def breed_even(parent: TreeNode, parent_index: Optional[int] = None) -> Tuple[TreeNode, TreeNode]:
    """Узел чётного поколения с нечётным пивотом p даёт двух детей.

    Первый — тот же вектор с пивотом p+1 (OSTP), второй — вектор первого, где
    центральное p+1 заменено двумя компонентами (p+1)/2 (ESTP).
    """
    if parent.generation % 2 != 0 or parent.parity_class is not ParityClass.OSTP:
        raise StructuralError(
            f"breed_even: узел {parent.game} поколения {parent.generation} "
            f"({parent.parity_class.value}) не из чётного поколения"
        )
    comps = parent.game.components
    center = len(comps) // 2
    grown = comps[center] + 1
    if grown % 2 != 0:
        raise StructuralError(
            f"breed_even: пивот {comps[center]} чётного поколения должен быть нечётным"
        )
    first = comps[:center] + (grown,) + comps[center + 1:]
    second = comps[:center] + (grown // 2, grown // 2) + comps[center + 1:]
    generation = parent.generation + 1
    return (
        _make_node(first, generation, parent_index),
        _make_node(second, generation, parent_index),
    )


def breed_odd(parent: TreeNode, parent_index: Optional[int] = None) -> TreeNode:
    """Узел нечётного поколения даёт одного OSTP-ребёнка.

    OSTP: пивот p+1; ESTP: между половинами вставляется центральная 1.
    """
    if parent.generation % 2 != 1:
        raise StructuralError(
            f"breed_odd: узел {parent.game} из поколения {parent.generation}, нужно нечётное"
        )
    comps = parent.game.components
    half = len(comps) // 2
    if parent.parity_class is ParityClass.OSTP:
        if comps[half] % 2 != 0:
            raise StructuralError(
                f"breed_odd: пивот {comps[half]} нечётного поколения должен быть чётным"
            )
        child = comps[:half] + (comps[half] + 1,) + comps[half + 1:]
    else:
        child = comps[:half] + (1,) + comps[half:]
    return _make_node(child, parent.generation + 1, parent_index)


# ── Построение ─────────────────────────────────────────────────────

def _next_layer(layer: GenerationLayer) -> Tuple[GenerationLayer, GenerationLayer]:
    """Следующий слой и текущий слой с заполненными индексами детей."""
    children: List[TreeNode] = []
    parents: List[TreeNode] = []
    for index, node in enumerate(layer.nodes):
        start = len(children)
        if layer.m % 2 == 0:
            children.extend(breed_even(node, index))
        else:
            children.append(breed_odd(node, index))
        parents.append(replace(node, children=tuple(range(start, len(children)))))
    return (
        GenerationLayer(layer.m + 1, tuple(children)),
        GenerationLayer(layer.m, tuple(parents)),
    )


def _layers(max_m: int) -> Iterator[GenerationLayer]:
    layer = GenerationLayer(0, (seed(),))
    for _ in range(max_m):
        following, layer = _next_layer(layer)
        yield layer
        layer = following
    yield layer


def iter_layers(max_m: int) -> Iterator[GenerationLayer]:
    """Слои 0..max_m по одному; предыдущие слои можно не хранить."""
    if max_m < 0:
        raise DomainError(f"max_m={max_m} < 0")
    return _layers(max_m)


def build_tree(max_m: int) -> List[GenerationLayer]:
    """Полное дерево до поколения max_m включительно."""
    layers = list(iter_layers(max_m))
    logger.info(
        "Дерево построено до m=%d: размеры слоёв %s",
        max_m,
        [len(layer.nodes) for layer in layers],
    )
    return layers


def verify_tree(layers: List[GenerationLayer]) -> None:
    """Сверяет дерево с перебором и законами чётности; бросает при расхождении."""
    for layer in layers:
        m = layer.m
        if len(layer.nodes) != gamma_total(m):
            raise InvariantViolationError(
                f"слой m={m}: {len(layer.nodes)} узлов, ожидалось Γ(m)={gamma_total(m)}"
            )
        ostp = 0
        for node in layer.nodes:
            if not is_self_twin(node.game) or node.game.n != m + MIN_PLAYERS:
                raise InvariantViolationError(f"слой m={m}: узел {node.game} некорректен")
            if node.parity_class is ParityClass.OSTP:
                ostp += 1
                if node.pivot_value is None or node.pivot_value % 2 != (m + 1) % 2:
                    raise InvariantViolationError(
                        f"слой m={m}: пивот {node.pivot_value} узла {node.game} нарушает чётность"
                    )
        expected_ostp = len(layer.nodes) if m % 2 == 0 else len(layer.nodes) // 2
        if ostp != expected_ostp:
            raise InvariantViolationError(f"слой m={m}: OSTP-узлов {ostp}, ожидалось {expected_ostp}")
        census = {g.components for g in enumerate_games(m + MIN_PLAYERS) if is_self_twin(g)}
        if layer.games() != census:
            raise InvariantViolationError(f"слой m={m} не совпадает с перебором")
    logger.info("Дерево до m=%d совпадает с перебором", layers[-1].m if layers else -1)
