import random

import numpy as np
import pytest

from fibtile.combinat.colorings import ColoredComposition, ColorScheme, SpottedTiling, colored_at, count_colored, enumerate_colored
from fibtile.combinat.core import OracleLimitError
from fibtile.combinat.ladder import (
    LadderEdge,
    LadderSpanningTree,
    bottom,
    colored_to_tree,
    count_trees,
    enumerate_trees,
    is_spanning_tree,
    ladder_edges,
    laplacian,
    top,
    tree_to_colored,
    vert,
)

SPOTTED = ColoredComposition.of(
    ColorScheme.FIB_EVEN,
    [
        SpottedTiling(((1, 1), (1, 1))),
        SpottedTiling(((1, 1),)),
        SpottedTiling(((4, 2), (1, 1))),
        SpottedTiling(((2, 1),)),
    ],
)


def test_ladder_edge():
    assert LadderEdge.parse("T3") == top(3)
    assert str(bottom(2)) == "B2"
    assert vert(4).endpoints() == (("t", 4), ("b", 4))
    assert bottom(2).endpoints() == (("b", 2), ("b", 3))
    assert vert(3).fits(3)
    assert not top(3).fits(3)

    with pytest.raises(ValueError):
        LadderEdge.parse("X1")

    with pytest.raises(ValueError):
        LadderEdge("V", 0)

    assert [str(e) for e in ladder_edges(3)] == ["B1", "B2", "T1", "T2", "V1", "V2", "V3"]
    assert len(ladder_edges(10)) == 28


def test_spanning_tree_checks():
    assert is_spanning_tree(LadderSpanningTree.of(2, ["B1", "T1", "V1"]))
    # cycle plus an isolated vertex
    assert not is_spanning_tree(LadderSpanningTree.of(3, ["B1", "T1", "V1", "V2", "B2"]))
    assert not is_spanning_tree(LadderSpanningTree.of(2, ["B1", "T1"]))

    with pytest.raises(ValueError):
        LadderSpanningTree.of(2, ["B2"])

    with pytest.raises(ValueError):
        tree_to_colored(LadderSpanningTree.of(2, ["B1", "T1", "V1", "V2"]))

    t = LadderSpanningTree.of(2, ["V1", "T1", "B1"])
    assert t.to_json() == {"n": 2, "edges": ["B1", "T1", "V1"]}
    assert LadderSpanningTree.from_json(t.to_json()) == t


def test_tree_example():
    t = colored_to_tree(SPOTTED)
    removed = {bottom(2), bottom(3), bottom(8), top(1), top(7), vert(4), vert(6), vert(7), vert(10)}
    assert t == LadderSpanningTree(10, frozenset(ladder_edges(10)) - removed)
    assert is_spanning_tree(t)
    assert tree_to_colored(t) == SPOTTED

    with pytest.raises(ValueError):
        colored_to_tree(colored_at(ColorScheme.FIB, 3, 0))


def test_enumerate_trees():
    assert [sum(1 for _ in enumerate_trees(n)) for n in range(1, 6)] == [1, 4, 15, 56, 209]

    with pytest.raises(OracleLimitError):
        next(enumerate_trees(9))


def test_tree_codec_exhaustive():
    for n in range(1, 6):
        domain = list(enumerate_colored(ColorScheme.FIB_EVEN, n))
        image = [colored_to_tree(cc) for cc in domain]
        assert len(set(image)) == len(image)
        assert set(image) == set(enumerate_trees(n))
        for cc, t in zip(domain, image):
            assert tree_to_colored(t) == cc


def test_tree_outputs_sampled():
    rng = random.Random(7)
    for n in (7, 8):
        total = count_colored(ColorScheme.FIB_EVEN, n)
        for _ in range(200):
            assert is_spanning_tree(colored_to_tree(colored_at(ColorScheme.FIB_EVEN, n, rng.randrange(total))))


def test_matrix_tree_count():
    lap = laplacian(3)
    assert lap.shape == (6, 6)
    assert np.array_equal(lap.sum(axis=1), np.zeros(6, dtype=int))
    assert int(lap.trace()) == 2 * len(ladder_edges(3))

    assert [count_trees(n) for n in range(1, 9)] == [1, 4, 15, 56, 209, 780, 2911, 10864]
    for n in range(1, 31):
        assert count_trees(n) == count_colored(ColorScheme.FIB_EVEN, n)


if __name__ == "__main__":
    pytest.main()
