"""
Text renderings of boards, arc diagrams and ladder spanning trees.

Every renderer is a pure function of its input, so output is stable byte for
byte. Boards draw as ASCII or SVG; ladder trees and arc diagrams also export
as Graphviz DOT.
"""

from typing import List, Tuple

from fibtile.combinat.colorings import ColoredComposition, to_board
from fibtile.combinat.core import Board
from fibtile.combinat.ladder import LadderSpanningTree, bottom, top, vert
from fibtile.combinat.partitions import SetPartition, arc_diagram

FORMATS = ("ascii", "svg", "dot")

CELL = 24
MARGIN = 8

SEPARATOR_GLYPHS = {"solid": "|", "dotted": ":"}


def _arc_rows(arcs) -> List[List[Tuple[int, int]]]:
    # shortest arcs take the lowest free row; arcs sharing a cell never share a row
    rows: List[List[Tuple[int, int]]] = []
    for i, j in sorted(arcs, key=lambda a: (a[1] - a[0], a[0])):
        for row in rows:
            if all(j < a or b < i for a, b in row):
                row.append((i, j))
                break
        else:
            rows.append([(i, j)])
    return rows


def board_ascii(board: Board) -> str:
    line = ["["]
    for p in range(1, board.n + 1):
        line.append("*" if p in board.spots else ".")
        if p < board.n:
            kind = board.separator(p)
            line.append(SEPARATOR_GLYPHS[kind.value] if kind else " ")
    line.append("]")

    rows = _arc_rows(board.arcs)
    grid = [[" "] * len(line) for _ in rows]
    for r, row in enumerate(rows):
        for i, j in row:
            ci, cj = 2 * i - 1, 2 * j - 1
            grid[r][ci] = grid[r][cj] = "+"
            for c in range(ci + 1, cj):
                grid[r][c] = "-"
            for below in range(r):
                for c in (ci, cj):
                    if grid[below][c] == " ":
                        grid[below][c] = "|"

    out = ["".join(g).rstrip() for g in reversed(grid)]
    out.append("".join(line))
    return "\n".join(out)


def _center(p: int) -> int:
    return MARGIN + (p - 1) * CELL + CELL // 2


def board_svg(board: Board) -> str:
    rows = _arc_rows(board.arcs)
    top_y = MARGIN + len(rows) * CELL // 2
    width = 2 * MARGIN + board.n * CELL
    height = top_y + CELL + MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for p in range(1, board.n + 1):
        x = MARGIN + (p - 1) * CELL
        out.append(
            f'  <rect class="cell" x="{x}" y="{top_y}" width="{CELL}" height="{CELL}" '
            f'fill="white" stroke="black" stroke-width="1"/>'
        )
    for p in sorted(board.solid | board.dotted):
        x = MARGIN + p * CELL
        if p in board.solid:
            style = 'stroke-width="4"'
            kind = "solid"
        else:
            style = 'stroke-width="2" stroke-dasharray="3,3"'
            kind = "dotted"
        out.append(f'  <line class="{kind}" x1="{x}" y1="{top_y}" x2="{x}" y2="{top_y + CELL}" stroke="black" {style}/>')
    for p in sorted(board.spots):
        out.append(f'  <circle class="spot" cx="{_center(p)}" cy="{top_y + CELL // 2}" r="{CELL // 5}" fill="black"/>')
    for r, row in enumerate(rows):
        h = (r + 1) * CELL // 2
        for i, j in sorted(row):
            x1, x2 = _center(i), _center(j)
            out.append(
                f'  <path class="arc" d="M {x1} {top_y} C {x1} {top_y - h} {x2} {top_y - h} {x2} {top_y}" '
                f'fill="none" stroke="black"/>'
            )
    out.append("</svg>")
    return "\n".join(out)


def render_board(board: Board, fmt: str) -> str:
    if fmt == "ascii":
        return board_ascii(board)
    if fmt == "svg":
        return board_svg(board)
    raise ValueError(f"boards render as ascii or svg, got {fmt!r}")


def partition_board(p: SetPartition) -> Board:
    return Board.make(p.n, arcs=arc_diagram(p))


def partition_dot(p: SetPartition) -> str:
    out = ["graph partition {", "  node [shape=circle, width=0.3, fixedsize=true];"]
    for x in range(1, p.n + 1):
        out.append(f'  p{x} [label="{x}", pos="{x},0!"];')
    for i, j in arc_diagram(p):
        out.append(f"  p{i} -- p{j};")
    out.append("}")
    return "\n".join(out)


def tree_ascii(t: LadderSpanningTree) -> str:
    rows = []
    for kind, rung in (("top", top), ("bottom", bottom)):
        line = ""
        for i in range(1, t.n + 1):
            line += "o"
            if i < t.n:
                line += "-" if rung(i) in t.edges else " "
        rows.append(line)
        if kind == "top":
            rows.append(" ".join("|" if vert(i) in t.edges else " " for i in range(1, t.n + 1)).rstrip())
    return "\n".join(rows)


def tree_dot(t: LadderSpanningTree) -> str:
    out = ["graph ladder {", "  node [shape=circle, width=0.3, fixedsize=true];"]
    for row, y in (("t", 1), ("b", 0)):
        for i in range(1, t.n + 1):
            out.append(f'  {row}{i} [pos="{i},{y}!"];')
    for e in sorted(t.edges):
        (r1, i1), (r2, i2) = e.endpoints()
        out.append(f'  {r1}{i1} -- {r2}{i2} [label="{e}"];')
    out.append("}")
    return "\n".join(out)


def render(value, fmt: str) -> str:
    """Render a board, colored composition, set partition or ladder tree."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if isinstance(value, LadderSpanningTree):
        if fmt == "svg":
            raise ValueError("ladder trees render as ascii or dot")
        return tree_dot(value) if fmt == "dot" else tree_ascii(value)
    if isinstance(value, SetPartition):
        return partition_dot(value) if fmt == "dot" else render_board(partition_board(value), fmt)
    if isinstance(value, ColoredComposition):
        value = to_board(value)
    if isinstance(value, Board):
        return render_board(value, fmt)
    raise ValueError(f"cannot render {type(value).__name__}")