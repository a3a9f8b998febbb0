"""Тесты преобразований между представлениями и перечисления игр."""

from __future__ import annotations

import pytest

from src.games.errors import CapacityError, DomainError, MalformedRepresentationError
from src.games.models import FreeBinaryRepr, FreeTypeRepr, FullBinaryRepr, Game, MinHomRepr
from src.games.representations import (
    binary_to_type,
    check_enumeration_cap,
    drop_to_free,
    enumerate_free_binaries,
    enumerate_games,
    free_binary_from_index,
    free_binary_of,
    game_to_dict,
    lift_free_binary,
    ones_positions_of,
    type_to_binary,
    type_to_weights,
    type_weights,
    weights_to_binary,
    weights_to_type,
)


def _fb(text: str) -> FreeBinaryRepr:
    return FreeBinaryRepr.parse(text)


def _full(text: str) -> FullBinaryRepr:
    return FullBinaryRepr.parse(text)


@pytest.mark.parametrize(
    "free, full",
    [
        ("", "1001"),
        ("10110", "101011001"),
        ("111111", "1011111101"),
    ],
)
def test_lift_free_binary(free: str, full: str) -> None:
    assert lift_free_binary(_fb(free)) == _full(full)


def test_drop_to_free() -> None:
    assert drop_to_free(_full("1001")).bits == ()
    assert drop_to_free(_full("1010110101")) == _fb("101101")


@pytest.mark.parametrize(
    "full, components",
    [
        ("1010110101", (2, 2, 1, 2, 2)),
        ("1001", (3,)),
        ("101011001", (2, 2, 1, 3)),
    ],
)
def test_binary_to_type_and_back(full: str, components: tuple) -> None:
    assert binary_to_type(_full(full)).components == components
    assert type_to_binary(FreeTypeRepr(components)) == _full(full)


def test_ones_positions() -> None:
    assert ones_positions_of(_full("101011001")) == (1, 3, 5, 6, 9)
    assert ones_positions_of(_full("1001")) == (1, 4)


@pytest.mark.parametrize(
    "components, quota, weights",
    [
        ((2, 2, 1, 3), 26, (1, 1, 2, 2, 5, 7, 7, 7, 19)),
        ((7,), 7, (1, 1, 1, 1, 1, 1, 1, 6)),
        ((2, 1, 1, 1, 1, 1, 2), 55, (1, 1, 2, 3, 5, 8, 13, 21, 21, 34)),
        ((3,), 3, (1, 1, 1, 2)),
        ((3, 4), 13, (1, 1, 1, 3, 3, 3, 3, 10)),
        ((4, 3), 13, (1, 1, 1, 1, 4, 4, 4, 9)),
    ],
)
def test_type_to_weights(components: tuple, quota: int, weights: tuple) -> None:
    rep = type_to_weights(FreeTypeRepr(components))
    assert rep == MinHomRepr(quota, weights)


def test_type_weights_recursion() -> None:
    """Веса типов: w_t = x_{t-1}·w_{t-1} + w_{t-2}, для верхнего множитель x_{h-1} - 1."""
    assert type_weights(FreeTypeRepr((2, 2, 1, 3))) == (1, 2, 5, 7, 19)


def test_weights_are_exact_for_large_games() -> None:
    """Игра Фибоначчи при n=100: веса выходят далеко за int64 и остаются точными."""
    x = FreeTypeRepr((2,) + (1,) * 95 + (2,))
    rep = type_to_weights(x)
    assert rep.weights[-1] > 2 ** 63
    assert 2 * rep.quota == 1 + sum(rep.weights)
    assert weights_to_type(rep) == x


def test_weights_to_binary_and_type(example_game: Game) -> None:
    rep = type_to_weights(example_game.free_type)
    assert weights_to_binary(rep) == _full("101011001")
    assert weights_to_type(rep) == example_game.free_type


def test_weights_to_type_rejects_shared_top_weight() -> None:
    """(4; 1,1,1,2,2) — не P-игра: верхний вес у двух игроков."""
    with pytest.raises(MalformedRepresentationError):
        weights_to_type(MinHomRepr(4, (1, 1, 1, 2, 2)))


@pytest.mark.parametrize("n, count", [(4, 1), (5, 2), (6, 4), (8, 16), (9, 32)])
def test_enumerate_counts(n: int, count: int) -> None:
    assert len(list(enumerate_free_binaries(n))) == count


def test_enumerate_is_lexicographic_and_unique() -> None:
    vectors = [fb.bits for fb in enumerate_free_binaries(10)]
    assert vectors == sorted(vectors)
    assert len(set(vectors)) == 64


def test_enumerate_range_matches_index() -> None:
    """Диапазон индексов даёт ту же подпоследовательность, что и полный перебор."""
    full = list(enumerate_free_binaries(9))
    assert list(enumerate_free_binaries(9, start=5, stop=12)) == full[5:12]
    assert free_binary_from_index(22, 5) == full[22]


def test_enumerate_rejects_small_n() -> None:
    with pytest.raises(DomainError):
        list(enumerate_free_binaries(3))
    with pytest.raises(DomainError):
        free_binary_from_index(4, 2)


def test_enumerate_games_round_trip() -> None:
    """Каждая игра возвращается к своему свободному вектору; свободные типы различны."""
    for n in range(4, 15):
        seen = set()
        for fb in enumerate_free_binaries(n):
            game = Game(binary_to_type(lift_free_binary(fb)))
            assert free_binary_of(game) == fb
            assert game.n == n
            seen.add(game.components)
        assert len(seen) == 2 ** (n - 4)


def test_game_to_dict(example_game: Game) -> None:
    data = game_to_dict(example_game)
    assert data == {
        "n": 9,
        "h": 5,
        "free_type": [2, 2, 1, 3],
        "free_binary": [1, 0, 1, 1, 0],
        "quota": "26",
        "weights": ["1", "1", "2", "2", "5", "7", "7", "7", "19"],
        "self_twin": False,
    }


def test_enumerate_games_n6() -> None:
    assert [g.components for g in enumerate_games(6)] == [(5,), (3, 2), (2, 3), (2, 1, 2)]


def test_check_enumeration_cap() -> None:
    assert check_enumeration_cap(9) == 5
    with pytest.raises(CapacityError, match="лимит 8"):
        check_enumeration_cap(9, cap=8)
    with pytest.raises(DomainError):
        check_enumeration_cap(3)
