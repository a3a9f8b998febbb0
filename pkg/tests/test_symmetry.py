"""Тесты двойственности, самодвойственности и транспонирования матриц."""

from __future__ import annotations

import pytest

from src.games.errors import MalformedRepresentationError
from src.games.models import FreeTypeRepr, FullBinaryRepr, Game
from src.games.representations import (
    enumerate_free_binaries,
    enumerate_games,
    free_binary_of,
    game_from_free_binary,
    lift_free_binary,
    type_to_binary,
    type_to_weights,
)
from src.games.symmetry import (
    OnesPositions,
    is_self_twin,
    is_self_twin_binary,
    ones_positions,
    symmetry_positions_check,
    twin,
    twin_binary,
    twin_pairs,
    twin_quota_check,
    twin_transpose_check,
)


def _game(*components: int) -> Game:
    return Game(FreeTypeRepr(components))


@pytest.mark.parametrize(
    "components, expected",
    [((3, 4), (4, 3)), ((2, 3, 2), (2, 3, 2)), ((2, 1, 4), (4, 1, 2))],
)
def test_twin(components: tuple, expected: tuple) -> None:
    assert twin(_game(*components)).components == expected


@pytest.mark.parametrize(
    "components, expected",
    [((7,), True), ((2, 5), False), ((2, 1, 2, 1, 2), True)],
)
def test_is_self_twin(components: tuple, expected: bool) -> None:
    assert is_self_twin(_game(*components)) is expected


def test_twin_is_involution_preserving_n_and_h() -> None:
    for n in range(4, 15):
        for game in enumerate_games(n):
            dual = twin(game)
            assert twin(dual) == game
            assert (dual.n, dual.h) == (game.n, game.h)


def test_twin_matches_reversed_free_binary() -> None:
    """Обращение свободного типа — то же, что обращение свободного вектора."""
    for n in range(4, 15):
        for fb in enumerate_free_binaries(n):
            game = game_from_free_binary(fb)
            assert free_binary_of(twin(game)) == twin_binary(fb)


def test_ones_positions() -> None:
    assert ones_positions(FullBinaryRepr.parse("1010110101")).positions == (1, 3, 5, 6, 8, 10)
    assert ones_positions(FullBinaryRepr.parse("1001")).positions == (1, 4)
    assert ones_positions(FullBinaryRepr.parse("101011001")).positions == (1, 3, 5, 6, 9)


def test_ones_positions_validation() -> None:
    with pytest.raises(MalformedRepresentationError):
        OnesPositions((2, 4), 4)
    with pytest.raises(MalformedRepresentationError):
        OnesPositions((1, 3, 3, 5), 5)


@pytest.mark.parametrize(
    "positions, n, expected",
    [((1, 3, 5, 6, 8, 10), 10, True), ((1, 4), 4, True), ((1, 3, 5, 6, 9), 9, False)],
)
def test_symmetry_positions_check(positions: tuple, n: int, expected: bool) -> None:
    assert symmetry_positions_check(OnesPositions(positions, n), n) is expected


def test_three_symmetry_criteria_agree() -> None:
    """Палиндромность свободного типа, свободного вектора и закон позиций единиц равносильны."""
    for n in range(4, 15):
        for fb in enumerate_free_binaries(n):
            game = game_from_free_binary(fb)
            by_type = is_self_twin(game)
            by_binary = is_self_twin_binary(fb)
            by_positions = symmetry_positions_check(ones_positions(lift_free_binary(fb)), n)
            assert by_type == by_binary == by_positions, str(game)


def test_twins_share_quota() -> None:
    assert type_to_weights(FreeTypeRepr((3, 4))).quota == 13
    assert type_to_weights(FreeTypeRepr((4, 3))).quota == 13
    assert type_to_weights(FreeTypeRepr((2, 1, 5))).quota == 17
    assert type_to_weights(FreeTypeRepr((5, 1, 2))).quota == 17
    for n in range(4, 15):
        assert all(twin_quota_check(g) for g in enumerate_games(n))


def test_twin_transpose_check_examples(adamo_game: Game, example_game: Game) -> None:
    assert twin_transpose_check(adamo_game) is True
    assert twin_transpose_check(example_game) is True


def test_twin_transpose_check_exhaustive() -> None:
    for n in range(4, 11):
        for game in enumerate_games(n):
            assert twin_transpose_check(game), str(game)


@pytest.mark.parametrize("n, pairs", [(4, 0), (6, 1), (8, 6), (9, 12)])
def test_twin_pairs_counts(n: int, pairs: int) -> None:
    found = twin_pairs(n)
    assert len(found) == pairs
    for first, second in found:
        assert twin(first) == second
        assert free_binary_of(first).bits < free_binary_of(second).bits


def test_type_to_binary_of_self_twin_is_palindrome() -> None:
    bits = type_to_binary(FreeTypeRepr((2, 2, 1, 2, 2))).bits
    assert bits == bits[::-1]
