import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from fibtile.combinat.colorings import ColoredComposition, components, from_components
from fibtile.combinat.core import Separator
from fibtile.combinat.partitions import TotallyNestedPartition

logger = logging.getLogger("unimodal")


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def junction(self) -> Separator:
        return Separator.DOTTED if self == Side.LEFT else Separator.SOLID

    @staticmethod
    def for_junction(junction: Separator) -> "Side":
        return Side.LEFT if junction == Separator.DOTTED else Side.RIGHT


def is_unimodal(values: Sequence[int]) -> bool:
    if not values or any(not isinstance(x, int) or x < 1 for x in values):
        return False
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    return i == len(values) - 1 and set(values) == set(range(1, max(values) + 1))


def is_tn_unimodal(values: Sequence[int]) -> bool:
    return (
        is_unimodal(values)
        and values[0] == 1
        and values[-1] == 1
        and all(abs(b - a) <= 1 for a, b in zip(values, values[1:]))
    )


@dataclass(frozen=True)
class UnimodalSeq:
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if not is_unimodal(values):
            raise ValueError(f"{values} is not a unimodal sequence covering an initial interval")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return ",".join(str(x) for x in self.values)

    @property
    def is_tn(self) -> bool:
        return is_tn_unimodal(self.values)

    def to_json(self):
        return list(self.values)

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list):
            raise ValueError("unimodal sequence must be a JSON array")
        return UnimodalSeq(tuple(obj))


def psi(t: TotallyNestedPartition) -> UnimodalSeq:
    a = [0] * t.n
    for j, block in enumerate(t.chain, start=1):
        for i in block:
            a[i - 1] = j
    return UnimodalSeq(tuple(a))


def psi_inv(u: UnimodalSeq) -> TotallyNestedPartition:
    if not u.is_tn:
        raise ValueError(f"{u.values} does not start and end with 1 with unit steps")
    blocks = [tuple(i for i, x in enumerate(u.values, start=1) if x == j) for j in range(1, max(u.values) + 1)]
    return TotallyNestedPartition.of(blocks)


def oplus(u: UnimodalSeq, v: UnimodalSeq, side: Side) -> UnimodalSeq:
    top = max(u.values)
    shifted = tuple(x + top for x in v.values)
    if side == Side.LEFT:
        at = u.values.index(top)
    else:
        at = len(u.values) - u.values[::-1].index(top)
    return UnimodalSeq(u.values[:at] + shifted + u.values[at:])


def colored_to_unimodal(cc: ColoredComposition) -> UnimodalSeq:
    chain = components(cc)
    acc = psi(chain[0][0])
    for comp, junction in chain[1:]:
        acc = oplus(acc, psi(comp), Side.for_junction(junction))
    return acc


def _peel_candidates(values: Tuple[int, ...]) -> List[Tuple[int, int, int, Optional[Side]]]:
    """Every (m, start, end, side) under which values = rest (+) segment with max(rest) = m."""
    found = []
    for m in range(max(values)):
        above = [i for i, x in enumerate(values) if x > m]
        start, end = above[0], above[-1]
        if end - start + 1 != len(above):
            continue
        segment = tuple(x - m for x in values[start:end + 1])
        if not is_tn_unimodal(segment):
            continue
        if m == 0:
            found.append((0, start, end, None))
            continue
        rest = values[:start] + values[end + 1:]
        if m not in rest:
            continue
        if start == rest.index(m):
            found.append((m, start, end, Side.LEFT))
        if start == len(rest) - rest[::-1].index(m):
            found.append((m, start, end, Side.RIGHT))
    return found


def peel(u: UnimodalSeq) -> Tuple[List[TotallyNestedPartition], List[Side]]:
    """
    Undo the left fold of colored_to_unimodal. The last connected component
    occupies the values above the maximum m of what remains, so peeling it
    means trying each m and keeping the unique split whose inserted segment
    is a shifted tn-sequence sitting before the first (left) or after the last
    (right) occurrence of m.
    """
    comps: List[TotallyNestedPartition] = []
    sides: List[Side] = []
    values = u.values
    while True:
        found = _peel_candidates(values)
        if len(found) != 1:
            raise ValueError(f"peeling {values} found {len(found)} candidate splits, expected exactly one")
        m, start, end, side = found[0]
        segment = UnimodalSeq(tuple(x - m for x in values[start:end + 1]))
        comps.append(psi_inv(segment))
        if side is None:
            break
        sides.append(side)
        values = values[:start] + values[end + 1:]
    comps.reverse()
    sides.reverse()
    return comps, sides


def unimodal_to_colored(u: UnimodalSeq) -> ColoredComposition:
    comps, sides = peel(u)
    chain = [(comps[0], None)] + [(c, s.junction) for c, s in zip(comps[1:], sides)]
    return from_components(chain)


def _unimodal_shapes(budget: int, value: int, peak: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # (left count, right count) per value below the peak
    if value == peak:
        if budget >= 1:
            yield ()
        return
    for left in range(budget + 1):
        for right in range(budget - left + 1):
            if left + right == 0:
                continue
            for rest in _unimodal_shapes(budget - left - right, value + 1, peak):
                yield ((left, right),) + rest


def enumerate_unimodal(n: int) -> Iterator[UnimodalSeq]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    found = []
    for peak in range(1, n + 1):
        for shape in _unimodal_shapes(n, 1, peak):
            used = sum(left + right for left, right in shape)
            ascent = tuple(v for v, (left, _) in enumerate(shape, start=1) for _ in range(left))
            descent = tuple(v for v, (_, right) in reversed(list(enumerate(shape, start=1))) for _ in range(right))
            found.append(ascent + (peak,) * (n - used) + descent)
    for values in sorted(found):
        yield UnimodalSeq(values)
