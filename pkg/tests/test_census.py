"""Тесты треугольников C, Γ, Δ, Θ и граничных игр."""

from __future__ import annotations

from unittest.mock import patch

import pytest

from src.games.errors import CapacityError, DomainError, InvariantViolationError
from src.games.models import FreeBinaryRepr
from src.games.representations import game_from_free_binary, type_to_weights
from src.games.symmetry import twin_pairs
from src.counting.census import (
    TriangleName,
    apex_game,
    c_count,
    c_triangle,
    census_by_enumeration,
    delta_theta,
    fibonacci,
    fibonacci_game,
    fibonacci_game_matches,
    fibonacci_weights,
    gamma_closed,
    gamma_closed_triangle,
    gamma_recurrence,
    gamma_total,
    triangle,
    verify_triangles,
)

GAMMA_ROWS = (
    (1,),
    (1, 1),
    (1, 0, 1),
    (1, 1, 1, 1),
    (1, 0, 2, 0, 1),
    (1, 1, 2, 2, 1, 1),
    (1, 0, 3, 0, 3, 0, 1),
    (1, 1, 3, 3, 3, 3, 1, 1),
    (1, 0, 4, 0, 6, 0, 4, 0, 1),
)


@pytest.mark.parametrize("m, k, value", [(4, 2, 6), (7, 0, 1), (5, 3, 10)])
def test_c_count(m: int, k: int, value: int) -> None:
    assert c_count(m, k) == value


def test_c_count_out_of_range() -> None:
    with pytest.raises(DomainError):
        c_count(4, 5)
    with pytest.raises(DomainError):
        c_count(-1, 0)


def test_c_triangle_rows_sum_to_powers_of_two() -> None:
    assert c_triangle(20).row_sums() == tuple(2 ** m for m in range(21))


@pytest.mark.parametrize("m, total", [(0, 1), (4, 4), (5, 8), (11, 64), (12, 64)])
def test_gamma_total(m: int, total: int) -> None:
    assert gamma_total(m) == total


@pytest.mark.parametrize("m, k, value", [(4, 2, 2), (6, 3, 0), (7, 4, 3)])
def test_gamma_closed(m: int, k: int, value: int) -> None:
    assert gamma_closed(m, k) == value


def test_gamma_table_rows() -> None:
    assert gamma_closed_triangle(8).rows == GAMMA_ROWS
    assert gamma_recurrence(8).rows == GAMMA_ROWS


def test_gamma_recurrence_cases() -> None:
    gamma = gamma_recurrence(8)
    assert gamma[8, 4] == gamma[7, 4] + gamma[7, 3] == 6
    assert gamma[8, 3] == gamma[7, 3] - gamma[7, 2] == 0


def test_gamma_closed_and_recurrence_agree_to_twenty() -> None:
    assert gamma_closed_triangle(20).rows == gamma_recurrence(20).rows
    assert gamma_recurrence(20).row_sums() == tuple(gamma_total(m) for m in range(21))


def test_delta_and_theta_rows() -> None:
    delta, theta = delta_theta(8)
    assert delta.rows[6] == (0, 6, 12, 20, 12, 6, 0)
    assert theta.rows[8] == (0, 4, 12, 28, 32, 28, 12, 4, 0)
    assert all(v % 2 == 0 for _, _, v in delta.cells())


def test_delta_theta_consistent_to_twenty() -> None:
    delta, theta = delta_theta(20)
    c = c_triangle(20)
    gamma = gamma_recurrence(20)
    for m, k, value in theta.cells():
        assert c[m, k] == gamma[m, k] + 2 * value
        assert delta[m, k] == 2 * value


def test_triangle_by_name() -> None:
    assert triangle(TriangleName.C, 3).rows[3] == (1, 3, 3, 1)
    assert triangle(TriangleName.GAMMA, 4).rows[4] == (1, 0, 2, 0, 1)
    assert triangle(TriangleName.THETA, 5).name is TriangleName.THETA
    with pytest.raises(DomainError):
        triangle(TriangleName.C, -1)


@pytest.mark.parametrize(
    "n, gamma, theta",
    [
        (4, (1,), (0,)),
        (8, (1, 0, 2, 0, 1), (0, 2, 2, 2, 0)),
        (9, (1, 1, 2, 2, 1, 1), (0, 2, 4, 4, 2, 0)),
    ],
)
def test_census_by_enumeration_rows(n: int, gamma: tuple, theta: tuple) -> None:
    row = census_by_enumeration(n)
    assert row.n == n
    assert row.gamma == gamma
    assert row.theta == theta


def test_census_by_enumeration_parallel_matches_serial() -> None:
    assert census_by_enumeration(11, jobs=3) == census_by_enumeration(11)


def test_census_by_enumeration_errors() -> None:
    with pytest.raises(CapacityError):
        census_by_enumeration(20, cap=16)
    with pytest.raises(DomainError):
        census_by_enumeration(3)


def test_verify_triangles_with_enumeration_to_twelve() -> None:
    verify_triangles(20, enumeration_max_m=12)


@pytest.mark.parametrize("i, value", [(1, 1), (2, 1), (3, 2), (10, 55)])
def test_fibonacci(i: int, value: int) -> None:
    assert fibonacci(i) == value


def test_boundary_games() -> None:
    assert apex_game(8).components == (7,)
    assert fibonacci_game(10).components == (2, 1, 1, 1, 1, 1, 2)
    assert fibonacci_game(4).components == (3,)
    assert fibonacci_weights(10).weights == (1, 1, 2, 3, 5, 8, 13, 21, 21, 34)
    assert fibonacci_weights(10).quota == 55


def test_boundary_games_are_unique_extremes() -> None:
    """Apex — единственная игра с h=2, Фибоначчи — единственная с h=n-2."""
    for n in range(6, 15):
        assert fibonacci_game_matches(n)
        assert type_to_weights(apex_game(n).free_type).weights[-1] == n - 2
        row = census_by_enumeration(n)
        assert row.c[0] == 1 and row.c[-1] == 1
        assert row.gamma[0] == 1 and row.gamma[-1] == 1


def test_enumeration_keys_of_boundary_games() -> None:
    """Нулевой свободный вектор даёт Apex, единичный — игру Фибоначчи."""
    for n in range(4, 15):
        m = n - 4
        zeros = game_from_free_binary(FreeBinaryRepr((0,) * m))
        ones = game_from_free_binary(FreeBinaryRepr((1,) * m))
        assert zeros == apex_game(n)
        assert type_to_weights(zeros.free_type).weights == (1,) * (n - 1) + (n - 2,)
        assert type_to_weights(zeros.free_type).quota == n - 1
        assert ones == fibonacci_game(n)
        assert type_to_weights(ones.free_type) == fibonacci_weights(n)


def test_twin_pairs_per_k_match_theta() -> None:
    _, theta = delta_theta(10)
    for n in range(4, 15):
        per_k = [0] * (n - 3)
        for first, _ in twin_pairs(n):
            per_k[first.k] += 1
        assert tuple(per_k) == theta.rows[n - 4], n
        assert census_by_enumeration(n).theta == theta.rows[n - 4]


def test_census_by_enumeration_counts_pairs_directly() -> None:
    """Θ из перебора — это число пар, а не (все - Γ)/2."""
    row = census_by_enumeration(10)
    assert all(t - g == 2 * p for t, g, p in zip(row.c, row.gamma, row.theta))
    assert sum(row.theta) == len(twin_pairs(10))


def test_census_by_enumeration_detects_unpaired_games() -> None:
    with patch("src.counting.census.is_self_twin", return_value=False):
        with pytest.raises(InvariantViolationError, match="k=0"):
            census_by_enumeration(6)
