import itertools
import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List

import numpy
from scipy.cluster.hierarchy import DisjointSet

from fibtile.combinat.colorings import ColorScheme, ColoredComposition, from_board, to_board
from fibtile.combinat.core import Board, OracleLimitError

logger = logging.getLogger("ladder")

TREE_ORACLE_LIMIT = 8

EDGE_KINDS = ("B", "T", "V")


@dataclass(frozen=True, order=True)
class LadderEdge:
    """Bottom rung B(i) joins bottom vertices i and i+1, T(i) the top ones; V(i) is the i-th vertical."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in EDGE_KINDS:
            raise ValueError(f"edge kind must be one of {EDGE_KINDS}, got {self.kind!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"edge index must be a positive integer, got {self.index!r}")

    @staticmethod
    def parse(text: str) -> "LadderEdge":
        m = re.fullmatch(r"([BTV])(\d+)", text.strip())
        if m is None:
            raise ValueError(f"edge id must look like T3, B2 or V5, got {text!r}")
        return LadderEdge(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.kind}{self.index}"

    def endpoints(self):
        if self.kind == "V":
            return ("t", self.index), ("b", self.index)
        row = "t" if self.kind == "T" else "b"
        return (row, self.index), (row, self.index + 1)

    def fits(self, n: int) -> bool:
        return self.index <= (n if self.kind == "V" else n - 1)


def top(i: int) -> LadderEdge:
    return LadderEdge("T", i)


def bottom(i: int) -> LadderEdge:
    return LadderEdge("B", i)


def vert(i: int) -> LadderEdge:
    return LadderEdge("V", i)


def ladder_edges(n: int) -> List[LadderEdge]:
    if n < 1:
        raise ValueError(f"ladder length must be positive, got {n}")
    edges = [bottom(i) for i in range(1, n)] + [top(i) for i in range(1, n)] + [vert(i) for i in range(1, n + 1)]
    return sorted(edges)


@dataclass(frozen=True)
class LadderSpanningTree:
    n: int
    edges: FrozenSet[LadderEdge]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ladder length must be a positive integer, got {self.n!r}")
        edges = frozenset(self.edges)
        for e in edges:
            if not e.fits(self.n):
                raise ValueError(f"edge {e} is outside the {self.n}-ladder")
        object.__setattr__(self, "edges", edges)

    @staticmethod
    def of(n: int, edges: Iterable) -> "LadderSpanningTree":
        return LadderSpanningTree(n, frozenset(e if isinstance(e, LadderEdge) else LadderEdge.parse(e) for e in edges))

    def key(self):
        return tuple(sorted(self.edges))

    def to_json(self):
        return {"n": self.n, "edges": [str(e) for e in sorted(self.edges)]}

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise ValueError("ladder tree must be an object with 'n' and 'edges'")
        if not isinstance(obj["edges"], list) or not all(isinstance(e, str) for e in obj["edges"]):
            raise ValueError("ladder tree 'edges' must be an array of edge ids")
        return LadderSpanningTree.of(obj["n"], obj["edges"])


def is_spanning_tree(t: LadderSpanningTree) -> bool:
    if len(t.edges) != 2 * t.n - 1:
        return False
    vertices = DisjointSet([(row, i) for row in "tb" for i in range(1, t.n + 1)])
    for e in t.edges:
        u, v = e.endpoints()
        if not vertices.merge(u, v):
            return False
    return vertices.n_subsets == 1


def colored_to_tree(cc: ColoredComposition) -> LadderSpanningTree:
    if cc.scheme != ColorScheme.FIB_EVEN:
        raise ValueError(f"colored_to_tree expects a fib-even colored composition, got {cc.scheme.value}")
    board = to_board(cc)
    edges = set(ladder_edges(cc.n))
    edges -= {vert(i) for i in range(1, cc.n + 1) if i not in board.spots}
    edges -= {bottom(j) for j in board.solid}
    edges -= {top(j) for j in board.dotted}
    return LadderSpanningTree(cc.n, frozenset(edges))


def tree_to_colored(t: LadderSpanningTree) -> ColoredComposition:
    if not is_spanning_tree(t):
        raise ValueError(f"edges {[str(e) for e in sorted(t.edges)]} do not form a spanning tree of the {t.n}-ladder")
    n = t.n
    board = Board.make(
        n,
        solid=[j for j in range(1, n) if bottom(j) not in t.edges],
        dotted=[j for j in range(1, n) if top(j) not in t.edges],
        spots=[i for i in range(1, n + 1) if vert(i) in t.edges],
    )
    return from_board(board, ColorScheme.FIB_EVEN)


def enumerate_trees(n: int) -> Iterator[LadderSpanningTree]:
    if n < 1:
        raise ValueError(f"ladder length must be positive, got {n}")
    if n > TREE_ORACLE_LIMIT:
        raise OracleLimitError("enumerate_trees", n, TREE_ORACLE_LIMIT)
    edges = ladder_edges(n)
    # combinations of a sorted list come out in sorted order already
    for subset in itertools.combinations(edges, 2 * n - 1):
        t = LadderSpanningTree(n, frozenset(subset))
        if is_spanning_tree(t):
            yield t


def laplacian(n: int) -> numpy.ndarray:
    index = {(row, i): k for k, (row, i) in enumerate((row, i) for row in "tb" for i in range(1, n + 1))}
    size = len(index)
    adjacency = numpy.zeros((size, size), dtype=int)
    for e in ladder_edges(n):
        u, v = (index[x] for x in e.endpoints())
        adjacency[u, v] = adjacency[v, u] = 1
    degree = numpy.diag(adjacency.sum(axis=1))
    return degree - adjacency


def _bareiss_det(m: numpy.ndarray) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = m.astype(object)
    size = a.shape[0]
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k, k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r, k] != 0), None)
            if swap is None:
                return 0
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        pivot = a[k, k]
        a[k + 1:, k + 1:] = (a[k + 1:, k + 1:] * pivot - numpy.outer(a[k + 1:, k], a[k, k + 1:])) // prev
        a[k + 1:, k] = 0
        prev = pivot
    return sign * int(a[size - 1, size - 1])


def count_trees(n: int) -> int:
    """Spanning trees of the n-ladder by the matrix-tree theorem."""
    reduced = laplacian(n)[1:, 1:]
    return _bareiss_det(reduced)
