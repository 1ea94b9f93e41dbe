import pytest

from fibtile.combinat.colorings import ColoredComposition, ColorScheme, SecondaryTiling, SpottedTiling
from fibtile.combinat.core import Board, Composition
from fibtile.combinat.ladder import LadderSpanningTree
from fibtile.combinat.partitions import SetPartition
from fibtile.utils.render import board_ascii, board_svg, partition_dot, render, render_board, tree_ascii, tree_dot

PLUS1_BOARD = Board.make(10, solid=(2, 6, 7), dotted=(3, 4, 9))
SPOTTED_BOARD = Board.make(10, solid=(2, 3, 8), dotted=(1, 7), spots=(1, 2, 3, 5, 8, 9))


def test_board_ascii():
    assert board_ascii(PLUS1_BOARD) == "[. .|.:.:. .|.|. .:.]"
    assert board_ascii(Board.make(1)) == "[.]"
    assert board_ascii(SPOTTED_BOARD) == "[*:*|*|. * . .:*|* .]"

    # one arc per row when arcs share a cell
    assert board_ascii(Board.make(3, arcs=((1, 3),))) == " +---+\n[. . .]"
    assert board_ascii(Board.make(3, arcs=((1, 2), (2, 3)))) == "   +-+\n +-+ |\n[. . .]"


def test_board_svg():
    svg = board_svg(SPOTTED_BOARD)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>")
    assert svg.count('class="cell"') == 10
    assert svg.count('class="spot"') == 6
    assert svg.count('class="solid"') == 3
    assert svg.count('class="dotted"') == 2
    assert svg.count('class="arc"') == 0

    arcs = board_svg(Board.make(4, arcs=((1, 4), (2, 3))))
    assert arcs.count('class="arc"') == 2

    # output is a pure function of the board
    assert board_svg(SPOTTED_BOARD) == svg


def test_render_board():
    assert render_board(PLUS1_BOARD, "ascii") == board_ascii(PLUS1_BOARD)
    assert render_board(PLUS1_BOARD, "svg") == board_svg(PLUS1_BOARD)

    with pytest.raises(ValueError):
        render_board(PLUS1_BOARD, "dot")


def test_partition_rendering():
    p = SetPartition.parse("13|2")
    assert render(p, "ascii") == " +---+\n[. . .]"
    assert partition_dot(p) == "\n".join(
        [
            "graph partition {",
            "  node [shape=circle, width=0.3, fixedsize=true];",
            '  p1 [label="1", pos="1,0!"];',
            '  p2 [label="2", pos="2,0!"];',
            '  p3 [label="3", pos="3,0!"];',
            "  p1 -- p3;",
            "}",
        ]
    )
    assert render(p, "dot") == partition_dot(p)
    assert render(p, "svg").count('class="arc"') == 1


def test_tree_rendering():
    t = LadderSpanningTree.of(2, ["B1", "T1", "V1"])
    assert tree_ascii(t) == "o-o\n|\no-o"
    assert render(t, "ascii") == tree_ascii(t)

    dot = tree_dot(t)
    assert dot.startswith("graph ladder {")
    assert '  b1 -- b2 [label="B1"];' in dot
    assert '  t1 -- b1 [label="V1"];' in dot
    assert dot.count(" -- ") == 3
    assert render(t, "dot") == dot

    with pytest.raises(ValueError):
        render(t, "svg")


def test_render_dispatch():
    cc = ColoredComposition.of(
        ColorScheme.FIB_PLUS1,
        [SecondaryTiling(Composition(t)) for t in ((2,), (1, 1, 2), (1,), (2, 1))],
    )
    assert render(cc, "ascii") == "[. .|.:.:. .|.|. .:.]"

    spotted = ColoredComposition.of(ColorScheme.FIB_EVEN, [SpottedTiling(((1, 1),))])
    assert render(spotted, "ascii") == "[*]"

    with pytest.raises(ValueError):
        render(PLUS1_BOARD, "png")

    with pytest.raises(ValueError):
        render(Composition((1,)), "ascii")


if __name__ == "__main__":
    pytest.main()
