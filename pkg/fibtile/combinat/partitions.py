import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from fibtile.combinat.core import OracleLimitError, require_int
from fibtile.combinat.series import CoeffSeq, invert_transform

logger = logging.getLogger("partitions")

SET_PARTITION_LIMIT = 12

Block = Tuple[int, ...]


def _canonical(blocks) -> Tuple[Block, ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"partition size must be a positive integer, got {self.n!r}")
        blocks = [b for b in self.blocks]
        if any(len(b) == 0 for b in blocks):
            raise ValueError("partition blocks must be nonempty")
        for b in blocks:
            for x in b:
                require_int(x, "partition element")
        blocks = _canonical(blocks)
        elements = sorted(x for b in blocks for x in b)
        if elements != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @staticmethod
    def of(blocks) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        n = sum(len(b) for b in blocks)
        return SetPartition(n, tuple(blocks))

    @staticmethod
    def parse(text: str) -> "SetPartition":
        """Compact form `14|236|5`, or `1,10|2,3,...` once labels exceed 9."""
        blocks = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty block in {text!r}")
            if "," in chunk:
                blocks.append(tuple(int(t) for t in chunk.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in chunk))
        return SetPartition.of(blocks)

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "|".join(sep.join(str(x) for x in b) for b in self.blocks)

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} is not an element of {self}")

    def to_json(self):
        return [list(b) for b in self.blocks]

    @staticmethod
    def from_json(obj):
        if isinstance(obj, str):
            return SetPartition.parse(obj)
        if not isinstance(obj, list) or not all(isinstance(b, list) for b in obj):
            raise ValueError("partition must be an array of arrays of integers")
        return SetPartition.of(obj)


def arc_diagram(p: SetPartition) -> List[Tuple[int, int]]:
    arcs = []
    for b in p.blocks:
        arcs.extend(zip(b, b[1:]))
    return sorted(arcs)


def has_crossing(arcs: Sequence[Tuple[int, int]]) -> bool:
    return any(i1 < i2 < j1 < j2 for i1, j1 in arcs for i2, j2 in arcs)


def has_nesting(arcs: Sequence[Tuple[int, int]]) -> bool:
    return any(i1 < i2 and j2 < j1 for i1, j1 in arcs for i2, j2 in arcs)


def is_indecomposable(p: SetPartition) -> bool:
    reach = 0
    for x in range(1, p.n):
        reach = max(reach, p.block_of(x)[-1])
        if reach == x:
            return False
    return True


def _nested_under(inner: Block, outer: Block) -> bool:
    return any(a < inner[0] and inner[-1] < b for a, b in zip(outer, outer[1:]))


def nesting_chain(p: SetPartition) -> Optional[Tuple[Block, ...]]:
    """The chain B_1..B_k with each block nested by the previous one, if it exists."""
    chain = p.blocks
    for prev, cur in zip(chain, chain[1:]):
        if not _nested_under(cur, prev):
            return None
    return chain


@dataclass(frozen=True)
class PartitionFlags:
    crossing: bool
    nesting: bool
    indecomposable: bool
    totally_nested: bool

    def to_json(self):
        return {
            "crossing": self.crossing,
            "nesting": self.nesting,
            "indecomposable": self.indecomposable,
            "totallyNested": self.totally_nested,
        }


def classify(p: SetPartition) -> PartitionFlags:
    arcs = arc_diagram(p)
    return PartitionFlags(
        crossing=has_crossing(arcs),
        nesting=has_nesting(arcs),
        indecomposable=is_indecomposable(p),
        totally_nested=nesting_chain(p) is not None,
    )


class TotallyNestedPartition(SetPartition):
    """A set partition whose blocks, sorted by minimum, form a nesting chain."""

    def __post_init__(self):
        super().__post_init__()
        if nesting_chain(self) is None:
            raise ValueError(f"{SetPartition.__str__(self)} is not totally nested")

    @property
    def chain(self) -> Tuple[Block, ...]:
        return self.blocks

    @staticmethod
    def of(blocks) -> "TotallyNestedPartition":
        p = SetPartition.of(blocks)
        return TotallyNestedPartition(p.n, p.blocks)

    @staticmethod
    def parse(text: str) -> "TotallyNestedPartition":
        p = SetPartition.parse(text)
        return TotallyNestedPartition(p.n, p.blocks)

    @staticmethod
    def from_json(obj):
        p = SetPartition.from_json(obj)
        return TotallyNestedPartition(p.n, p.blocks)


def _restricted_growth(n: int) -> Iterator[List[int]]:
    rgs = [0] * n

    def fill(i: int, top: int):
        if i == n:
            yield rgs
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from fill(i + 1, max(top, v))

    rgs[0] = 0
    yield from fill(1, 0)


def enumerate_set_partitions(n: int) -> Iterator[SetPartition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > SET_PARTITION_LIMIT:
        raise OracleLimitError("enumerate_set_partitions", n, SET_PARTITION_LIMIT)
    for rgs in _restricted_growth(n):
        blocks = [[] for _ in range(max(rgs) + 1)]
        for x, b in enumerate(rgs, start=1):
            blocks[b].append(x)
        yield SetPartition(n, tuple(tuple(b) for b in blocks))


def _ncn(n: int) -> Iterator[SetPartition]:
    # blocks grow left to right; a new arc (a, x) is checked against every
    # existing arc, all of which end before x
    blocks: List[List[int]] = []
    arcs: List[Tuple[int, int]] = []

    def compatible(a: int) -> bool:
        return not any(c < a < d or a < c for c, d in arcs)

    def place(x: int):
        if x > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            a = b[-1]
            if compatible(a):
                b.append(x)
                arcs.append((a, x))
                yield from place(x + 1)
                arcs.pop()
                b.pop()
        blocks.append([x])
        yield from place(x + 1)
        blocks.pop()

    yield from place(1)


def enumerate_ncn(n: int) -> Iterator[SetPartition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    yield from sorted(_ncn(n), key=lambda p: p.blocks)


def enumerate_ncn_indecomposable(n: int) -> Iterator[SetPartition]:
    for p in enumerate_ncn(n):
        if is_indecomposable(p):
            yield p


def _totally_nested_chains(n: int) -> Iterator[Tuple[Block, ...]]:
    yield (tuple(range(1, n + 1)),)
    # the outer block is [n] minus one interval strictly inside it, and the
    # interval carries a totally nested partition of its own
    for lo in range(2, n):
        for hi in range(lo, n):
            outer = tuple(x for x in range(1, n + 1) if not lo <= x <= hi)
            for inner in _totally_nested_chains(hi - lo + 1):
                yield (outer,) + tuple(tuple(x + lo - 1 for x in b) for b in inner)


def enumerate_totally_nested(n: int) -> Iterator[TotallyNestedPartition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    found = [TotallyNestedPartition(n, chain) for chain in _totally_nested_chains(n)]
    yield from sorted(found, key=lambda p: p.blocks)


def ncn_indecomposable_count(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 1 if n <= 2 else 2 ** (n - 2)


def ncn_counts(max_n: int) -> List[int]:
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    w = CoeffSeq(tuple(ncn_indecomposable_count(n) for n in range(1, max_n + 1)))
    return list(invert_transform(w))


def _runs(block: Block) -> List[Block]:
    runs = [[block[0]]]
    for x in block[1:]:
        if x == runs[-1][-1] + 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(r) for r in runs]


def _require_ncn_indecomposable(p: SetPartition):
    flags = classify(p)
    if flags.crossing or flags.nesting or not flags.indecomposable:
        raise ValueError(f"{p} is not a noncrossing, nonnesting, indecomposable partition")


def phi(p: SetPartition) -> TotallyNestedPartition:
    _require_ncn_indecomposable(p)
    first = p.blocks[0]
    runs = _runs(first)
    gaps = [tuple(range(a[-1] + 1, b[0])) for a, b in zip(runs, runs[1:])]

    sequence: List[Block] = []
    for i, run in enumerate(runs):
        if i:
            sequence.append(gaps[i - 1])
        sequence.append(run)

    last = len(sequence) - 1
    blocks = [sequence[i] + sequence[last - i] for i in range(last // 2)]
    blocks.append(sequence[last // 2])
    return TotallyNestedPartition.of(blocks)


def phi_inv(t: TotallyNestedPartition) -> SetPartition:
    merged = tuple(x for b in t.chain[0::2] for x in b)
    singletons = [(x,) for b in t.chain[1::2] for x in b]
    return SetPartition.of([merged] + singletons)


def lemma_split(p: SetPartition) -> Tuple[SetPartition, str]:
    """
    Split NCN^i(n) into two copies of NCN^i(n-1), n >= 3. Returns the smaller
    partition and the side it came from: "singleton" when n-1 was a singleton
    block, "merged" otherwise.
    """
    _require_ncn_indecomposable(p)
    n = p.n
    if n < 3:
        raise ValueError(f"lemma_split needs n >= 3, got {n}")
    if p.block_of(n - 1) == (n - 1,):
        blocks = [tuple(n - 1 if x == n else x for x in b) for b in p.blocks if b != (n - 1,)]
        return SetPartition.of(blocks), "singleton"
    blocks = [tuple(x for x in b if x != n) for b in p.blocks]
    return SetPartition.of(blocks), "merged"


def lemma_join(q: SetPartition, side: str) -> SetPartition:
    _require_ncn_indecomposable(q)
    m = q.n
    if m < 2:
        raise ValueError(f"lemma_join needs a partition of at least 2 elements, got {m}")
    if side == "merged":
        return SetPartition.of([b + (m + 1,) if m in b else b for b in q.blocks])
    if side == "singleton":
        blocks = [tuple(m + 1 if x == m else x for x in b) for b in q.blocks]
        return SetPartition.of(blocks + [(m,)])
    raise ValueError(f"side must be 'merged' or 'singleton', got {side!r}")
