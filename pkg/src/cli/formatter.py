"""Форматирование результатов для вывода: таблицы, CSV, JSON и DOT."""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, Iterable, List, Sequence

from src.counting.census import Triangle, TriangleName
from src.games.models import Game, ParityClass
from src.games.representations import game_to_dict, type_to_weights
from src.genealogy.pivots import PivotTriangle
from src.genealogy.tree import GenerationLayer


def format_json(data: object) -> str:
    """JSON с фиксированным форматированием; одинаковые данные дают одинаковые байты."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# ── Треугольники ───────────────────────────────────────────────────

def triangle_csv(tri: Triangle) -> str:
    return _csv(("m", "k", "value"), tri.cells())


def triangle_table(tri: Triangle) -> str:
    """Заголовок с названием треугольника, затем строки «m | значения»."""
    width = max(len(str(v)) for _, _, v in tri.cells())
    m_width = len(str(tri.max_m))
    lines = [f"# {TriangleName.label(tri.name.value)}"]
    lines.extend(
        f"{m:>{m_width}} | " + " ".join(f"{v:>{width}}" for v in row)
        for m, row in enumerate(tri.rows)
    )
    return "\n".join(lines) + "\n"


# ── Пивоты ─────────────────────────────────────────────────────────

def pivots_csv(tri: PivotTriangle) -> str:
    return _csv(
        ("m", "c", "value", "repetitions"),
        ((m, c, e.value, e.repetitions) for m, c, e in tri.cells()),
    )


def pivots_table(tri: PivotTriangle) -> str:
    """Как в печатной таблице: «значение(повторения)»."""
    lines = []
    for m in tri.generations():
        cells = "  ".join(f"{e.value}({e.repetitions})" for e in tri.rows[m])
        lines.append(f"{m:>2} | {cells}")
    return "\n".join(lines) + "\n"


# ── Игры ───────────────────────────────────────────────────────────

def format_game_line(game: Game) -> str:
    """Краткая строка: свободный тип, (q; w) и признак самодвойственности."""
    data = game_to_dict(game)
    mark = "  self twin" if data["self_twin"] else ""
    return f"h={game.h}  {game}  {type_to_weights(game.free_type)}{mark}"


def games_table(games: Iterable[Game]) -> str:
    return "".join(format_game_line(g) + "\n" for g in games)


# ── Дерево ─────────────────────────────────────────────────────────

def tree_to_dict(layers: Sequence[GenerationLayer]) -> Dict[str, object]:
    out: List[Dict[str, object]] = []
    for layer in layers:
        nodes = []
        for node in layer.nodes:
            entry = game_to_dict(node.game)
            entry["parity_class"] = node.parity_class.value
            entry["pivot"] = node.pivot_value
            entry["parent_index"] = node.parent_index
            entry["children"] = list(node.children)
            nodes.append(entry)
        out.append({"m": layer.m, "size": len(layer.nodes), "nodes": nodes})
    return {"layers": out}


def tree_dot(layers: Sequence[GenerationLayer]) -> str:
    """Ориентированный граф Graphviz: вершина m_i подписана свободным типом."""
    lines = ["digraph genealogy {", "  rankdir=TB;", "  node [shape=box];"]
    for layer in layers:
        names = [f"m{layer.m}_{i}" for i in range(len(layer.nodes))]
        for name, node in zip(names, layer.nodes):
            kind = ParityClass.label(node.parity_class.value)
            lines.append(f'  {name} [label="{node.game}\\n{kind}"];')
        lines.append("  { rank=same; " + " ".join(names) + "; }")
        for i, node in enumerate(layer.nodes):
            if node.parent_index is not None:
                lines.append(f"  m{layer.m - 1}_{node.parent_index} -> m{layer.m}_{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
