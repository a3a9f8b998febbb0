"""Команды CLI: разбор аргументов и тонкие адаптеры над библиотекой."""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional, Sequence, TextIO

from src.batch.certify import certify_all
from src.cli.formatter import (
    format_json,
    games_table,
    pivots_csv,
    pivots_table,
    tree_dot,
    tree_to_dict,
    triangle_csv,
    triangle_table,
)
from src.cli.reproduce import reproduce_paper
from src.config import config
from src.counting.census import TriangleName, triangle, verify_triangles
from src.games.errors import DomainError, GameError, InvariantViolationError
from src.games.models import FreeBinaryRepr, FreeTypeRepr, FullBinaryRepr, Game, MinHomRepr
from src.games.oracle import certify
from src.games.representations import (
    binary_to_type,
    check_enumeration_cap,
    enumerate_games,
    free_binary_of,
    game_from_free_binary,
    game_from_free_type,
    game_to_dict,
    type_to_binary,
    type_to_weights,
    weights_to_type,
)
from src.games.symmetry import is_self_twin, twin
from src.genealogy.pivots import (
    GenerationParity,
    even_pivot_triangle,
    harvest_pivots,
    odd_pivot_triangle,
    verify_pivots,
)
from src.genealogy.tree import build_tree, verify_tree
from src.storage.database import Database

logger = logging.getLogger(__name__)


class Verb(str, Enum):
    """Подкоманда CLI."""

    CONVERT = "convert"
    VERIFY = "verify"
    TWIN = "twin"
    ENUMERATE = "enumerate"
    CENSUS = "census"
    TREE = "tree"
    PIVOTS = "pivots"
    REPRODUCE_PAPER = "reproduce-paper"
    STORE = "store"
    LOOKUP = "lookup"


class _Parser(argparse.ArgumentParser):
    """Ошибки разбора — синопсис в stderr и код 1 (код 2 занят нарушениями инвариантов)."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: ошибка: {message}\n")


# ── Разбор входных представлений ──────────────────────────────────

def _game_from_args(args: argparse.Namespace) -> Game:
    if getattr(args, "free_type", None):
        return game_from_free_type(FreeTypeRepr.parse(args.free_type))
    if getattr(args, "free_binary", None) is not None:
        return game_from_free_binary(FreeBinaryRepr.parse(args.free_binary))
    if getattr(args, "binary", None):
        return game_from_free_type(binary_to_type(FullBinaryRepr.parse(args.binary)))
    if getattr(args, "weights", None):
        rep = MinHomRepr.parse(args.weights)
        game = game_from_free_type(weights_to_type(rep))
        if type_to_weights(game.free_type) != rep:
            raise DomainError(f"{rep} не является минимальным однородным представлением P-игры")
        return game
    raise DomainError("нужно задать игру: --free-type, --free-binary, --binary или --weights")


def _add_game_options(parser: argparse.ArgumentParser, *, weights: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--free-type", help="свободный тип через запятую, например 2,2,1,3")
    group.add_argument("--free-binary", help="свободный бинарный вектор, например 10110")
    group.add_argument("--binary", help="полный бинарный вектор, например 101011001")
    if weights:
        group.add_argument("--weights", help="квота и веса через запятую: 26,1,1,2,2,5,7,7,7,19")


# ── Подкоманды ─────────────────────────────────────────────────────

def cmd_convert(args: argparse.Namespace, out: TextIO) -> int:
    game = _game_from_args(args)
    if args.format == "json":
        out.write(format_json(game_to_dict(game)))
        return 0
    rep = type_to_weights(game.free_type)
    out.write(f"free_type={','.join(str(x) for x in game.components)}\n")
    out.write(f"free_binary={free_binary_of(game)}\n")
    out.write(f"binary={type_to_binary(game.free_type)}\n")
    out.write(f"q={rep.quota}\n")
    out.write(f"weights={','.join(str(w) for w in rep.weights)}\n")
    out.write(f"self_twin={str(is_self_twin(game)).lower()}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.n is not None:
        if not args.all:
            raise DomainError("с --n нужен флаг --all")
        summary = certify_all(args.n, jobs=args.jobs, keep_reports=True)
        reports = []
        for fb, report in summary.reports:
            entry = {"free_binary": str(fb), **report.to_dict(emit_wm=args.emit_wm)}
            reports.append(entry)
        out.write(format_json(reports))
        if not summary.all_parsimonious:
            raise InvariantViolationError(
                f"n={args.n}: парсимониальны {summary.parsimonious} из {summary.games} "
                f"сгенерированных игр"
            )
        return 0
    if args.weights:
        rep = MinHomRepr.parse(args.weights)
    else:
        rep = type_to_weights(_game_from_args(args).free_type)
    out.write(format_json(certify(rep).to_dict(emit_wm=args.emit_wm)))
    return 0


def cmd_twin(args: argparse.Namespace, out: TextIO) -> int:
    game = _game_from_args(args)
    dual = twin(game)
    out.write(
        format_json(
            {
                "free_type": list(game.components),
                "twin": list(dual.components),
                "quota": str(type_to_weights(game.free_type).quota),
                "twin_quota": str(type_to_weights(dual.free_type).quota),
                "self_twin": is_self_twin(game),
            }
        )
    )
    return 0


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    check_enumeration_cap(args.n)
    games = list(enumerate_games(args.n))
    if args.format == "json":
        out.write(format_json([game_to_dict(g) for g in games]))
    else:
        out.write(games_table(games))
    return 0


def cmd_census(args: argparse.Namespace, out: TextIO) -> int:
    if args.check:
        verify_triangles(args.max_m, enumeration_max_m=min(args.max_m, 12), jobs=args.jobs)
    tri = triangle(TriangleName(args.triangle), args.max_m)
    out.write(triangle_csv(tri) if args.format == "csv" else triangle_table(tri))
    return 0


def cmd_tree(args: argparse.Namespace, out: TextIO) -> int:
    layers = build_tree(args.max_m)
    if args.check:
        verify_tree(layers)
    out.write(format_json(tree_to_dict(layers)) if args.format == "json" else tree_dot(layers))
    return 0


def cmd_pivots(args: argparse.Namespace, out: TextIO) -> int:
    parity = GenerationParity(args.parity)
    if args.source == "tree":
        layers = build_tree(args.max_m)
        verify_pivots(layers)
        even, odd = harvest_pivots(layers)
        tri = even if parity is GenerationParity.EVEN else odd
    elif parity is GenerationParity.EVEN:
        tri = even_pivot_triangle(args.max_m)
    else:
        tri = odd_pivot_triangle(args.max_m)
    out.write(pivots_csv(tri) if args.format == "csv" else pivots_table(tri))
    return 0


def cmd_reproduce_paper(args: argparse.Namespace, out: TextIO) -> int:
    for path in reproduce_paper(Path(args.out_dir)):
        out.write(f"{path}\n")
    return 0


async def _store(db_path: str, n: int) -> int:
    db = Database(db_path)
    await db.connect()
    try:
        return await db.upsert_games(enumerate_games(n))
    finally:
        await db.close()


async def _lookup(db_path: str, args: argparse.Namespace) -> List[Dict[str, object]]:
    db = Database(db_path)
    await db.connect()
    try:
        if args.free_type:
            found = await db.get_game(FreeTypeRepr.parse(args.free_type))
            return [found] if found is not None else []
        return await db.find_by_quota(args.n, args.quota)
    finally:
        await db.close()


def cmd_store(args: argparse.Namespace, out: TextIO) -> int:
    check_enumeration_cap(args.n)
    count = asyncio.run(_store(args.db or config.db_path, args.n))
    out.write(f"{count}\n")
    return 0


def cmd_lookup(args: argparse.Namespace, out: TextIO) -> int:
    if not args.free_type and (args.n is None or args.quota is None):
        raise DomainError("нужно задать --free-type или пару --n и --quota")
    out.write(format_json(asyncio.run(_lookup(args.db or config.db_path, args))))
    return 0


_HANDLERS: Dict[Verb, Callable[[argparse.Namespace, TextIO], int]] = {
    Verb.CONVERT: cmd_convert,
    Verb.VERIFY: cmd_verify,
    Verb.TWIN: cmd_twin,
    Verb.ENUMERATE: cmd_enumerate,
    Verb.CENSUS: cmd_census,
    Verb.TREE: cmd_tree,
    Verb.PIVOTS: cmd_pivots,
    Verb.REPRODUCE_PAPER: cmd_reproduce_paper,
    Verb.STORE: cmd_store,
    Verb.LOOKUP: cmd_lookup,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parsigames", description="Точная комбинаторика парсимониальных игр")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser(Verb.CONVERT.value, help="преобразовать представление игры")
    _add_game_options(p)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser(Verb.VERIFY.value, help="проверить игру оракулом")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="проверить все игры с n игроками (вместе с --all)")
    group.add_argument("--free-type")
    group.add_argument("--free-binary")
    group.add_argument("--binary")
    group.add_argument("--weights", help="произвольное представление q,w_1,...,w_n")
    p.add_argument("--all", action="store_true")
    p.add_argument("--emit-wm", action="store_true", help="добавить маски минимальных коалиций")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser(Verb.TWIN.value, help="двойник игры и квоты")
    _add_game_options(p, weights=False)

    p = sub.add_parser(Verb.ENUMERATE.value, help="все игры с n игроками")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser(Verb.CENSUS.value, help="треугольники C, Γ, Δ, Θ")
    p.add_argument("--max-m", type=int, default=config.max_m)
    p.add_argument("--triangle", choices=[t.value for t in TriangleName], default="gamma")
    p.add_argument("--format", choices=("csv", "table"), default="table")
    p.add_argument("--check", action="store_true", help="сверить формулы, рекуррентности и перебор")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser(Verb.TREE.value, help="генеалогическое дерево самодвойственных игр")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--check", action="store_true", help="сверить слои с перебором")

    p = sub.add_parser(Verb.PIVOTS.value, help="треугольники пивотов")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--parity", choices=[x.value for x in GenerationParity], default="even")
    p.add_argument("--format", choices=("csv", "table"), default="table")
    p.add_argument("--source", choices=("formula", "tree"), default="formula")

    p = sub.add_parser(Verb.REPRODUCE_PAPER.value, help="воспроизвести таблицы и каталоги в файлы")
    p.add_argument("--out-dir", required=True)

    p = sub.add_parser(Verb.STORE.value, help="записать каталог n игроков в SQLite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--db")

    p = sub.add_parser(Verb.LOOKUP.value, help="найти игры в каталоге SQLite")
    p.add_argument("--n", type=int)
    p.add_argument("--quota", type=int)
    p.add_argument("--free-type")
    p.add_argument("--db")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Выполняет одну подкоманду; возвращает код завершения 0/1/2."""
    args = build_parser().parse_args(argv)
    stream = out if out is not None else sys.stdout
    verb = Verb(args.verb)
    try:
        return _HANDLERS[verb](args, stream)
    except InvariantViolationError as exc:
        logger.error("Нарушение инварианта в %s: %s", verb.value, exc)
        return exc.exit_code
    except GameError as exc:
        logger.error("Ошибка %s: %s", verb.value, exc)
        return exc.exit_code
