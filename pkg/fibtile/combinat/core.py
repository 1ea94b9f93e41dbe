import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, FrozenSet, Iterator, List, Optional, Tuple

from scipy.cluster.hierarchy import DisjointSet

logger = logging.getLogger("combinat")


class ConstraintError(ValueError):
    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (at index {index})")
        self.index = index


class OracleLimitError(ValueError):
    def __init__(self, name: str, n: int, limit: int):
        super().__init__(f"{name} is a brute-force oracle limited to n <= {limit}, got n={n}")
        self.n = n
        self.limit = limit


def require_int(value, what: str, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValueError(f"{what} must be an integer >= {minimum}, got {value!r}")
    return value


def fibonacci(k: int) -> int:
    if k < 0:
        raise ValueError(f"fibonacci index must be nonnegative, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("composition must have at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def boundaries(self) -> List[int]:
        """Cell positions after which a part ends, excluding the right end of the board."""
        out, total = [], 0
        for p in self.parts[:-1]:
            total += p
            out.append(total)
        return out

    def to_json(self):
        return list(self.parts)

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list):
            raise ValueError(f"composition must be a JSON array, got {type(obj).__name__}")
        return Composition(tuple(obj))


class Separator(Enum):
    SOLID = "solid"
    DOTTED = "dotted"


@dataclass(frozen=True)
class Board:
    n: int
    solid: FrozenSet[int] = field(default_factory=frozenset)
    dotted: FrozenSet[int] = field(default_factory=frozenset)
    spots: FrozenSet[int] = field(default_factory=frozenset)
    arcs: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        require_int(self.n, "board length")
        for name in ("solid", "dotted", "spots"):
            positions = frozenset(getattr(self, name))
            for p in positions:
                require_int(p, f"{name} position")
            object.__setattr__(self, name, positions)
        arcs = frozenset(tuple(a) if isinstance(a, (list, tuple)) else (a,) for a in self.arcs)
        for a in arcs:
            if len(a) != 2:
                raise ValueError(f"arc {a!r} must be a pair of cells")
            for cell in a:
                require_int(cell, "arc end")
        object.__setattr__(self, "arcs", arcs)

        for p in self.solid | self.dotted:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"separator position {p} outside 1..{self.n - 1}")
        both = self.solid & self.dotted
        if both:
            raise ValueError(f"positions {sorted(both)} are both solid and dotted")
        for s in self.spots:
            if not 1 <= s <= self.n:
                raise ValueError(f"spot {s} outside 1..{self.n}")
        for i, j in self.arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"arc ({i},{j}) must satisfy 1 <= i < j <= {self.n}")
        if self.spots and self.arcs:
            raise ValueError("a board carries spots or arcs, never both")

    @staticmethod
    def make(n, solid=(), dotted=(), spots=(), arcs=()):
        return Board(n, frozenset(solid), frozenset(dotted), frozenset(spots), frozenset(arcs))

    def separator(self, p: int) -> Optional[Separator]:
        if p in self.solid:
            return Separator.SOLID
        if p in self.dotted:
            return Separator.DOTTED
        return None

    def segments(self) -> List[Tuple[int, int]]:
        """Maximal runs of cells (first, last) between consecutive non-empty separators."""
        cuts = sorted(self.solid | self.dotted)
        out, start = [], 1
        for p in cuts:
            out.append((start, p))
            start = p + 1
        out.append((start, self.n))
        return out

    def parts(self) -> List[Tuple[int, int]]:
        """Maximal runs of cells between solid separators."""
        out, start = [], 1
        for p in sorted(self.solid):
            out.append((start, p))
            start = p + 1
        out.append((start, self.n))
        return out

    def to_json(self):
        sep = {str(p): Separator.SOLID.value for p in self.solid}
        sep.update({str(p): Separator.DOTTED.value for p in self.dotted})
        return {
            "n": self.n,
            "sep": dict(sorted(sep.items(), key=lambda kv: int(kv[0]))),
            "spots": sorted(self.spots),
            "arcs": [list(a) for a in sorted(self.arcs)],
        }

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict) or "n" not in obj:
            raise ValueError("board must be a JSON object with an 'n' field")
        sep, spots, arcs = obj.get("sep", {}), obj.get("spots", []), obj.get("arcs", [])
        if not isinstance(sep, dict):
            raise ValueError("board 'sep' must map positions to 'solid' or 'dotted'")
        if not isinstance(spots, list) or not isinstance(arcs, list):
            raise ValueError("board 'spots' and 'arcs' must be arrays")
        solid, dotted = [], []
        for key, kind in sep.items():
            if not key.isdigit():
                raise ValueError(f"separator position {key!r} is not an integer")
            (solid if Separator(kind) == Separator.SOLID else dotted).append(int(key))
        for a in arcs:
            if not isinstance(a, list) or len(a) != 2:
                raise ValueError(f"arc {a!r} must be a [start, end] pair")
        return Board.make(
            require_int(obj["n"], "board length"),
            solid=solid,
            dotted=dotted,
            spots=[require_int(s, "spot") for s in spots],
            arcs=[(require_int(a[0], "arc end"), require_int(a[1], "arc end")) for a in arcs],
        )


class RestrictedFamily(Enum):
    ONE_TWO = "one-two"
    ODD = "odd"
    GREATER_THAN_ONE = "greater-than-one"

    def allows(self, part: int) -> bool:
        if self == RestrictedFamily.ONE_TWO:
            return part in (1, 2)
        if self == RestrictedFamily.ODD:
            return part % 2 == 1
        return part >= 2

    def expected_count(self, n: int) -> int:
        shift = {RestrictedFamily.ONE_TWO: 1, RestrictedFamily.ODD: 0, RestrictedFamily.GREATER_THAN_ONE: -1}
        return fibonacci(n + shift[self])


def _compositions(n: int, allowed: Callable[[int], bool]) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        if not allowed(first):
            continue
        for rest in _compositions(n - first, allowed):
            yield (first,) + rest


def enumerate_compositions(n: int) -> Iterator[Composition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for parts in _compositions(n, lambda p: True):
        yield Composition(parts)


def enumerate_family(family: RestrictedFamily, n: int) -> Iterator[Composition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for parts in _compositions(n, family.allows):
        yield Composition(parts)


def enumerate_ending(n: int, parity: str) -> Iterator[Composition]:
    """Compositions of n whose last part is 'odd' or 'even'."""
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    want = 1 if parity == "odd" else 0
    for c in enumerate_compositions(n):
        if c.parts[-1] % 2 == want:
            yield c


def _require_family(c: Composition, family: RestrictedFamily, name: str):
    for p in c.parts:
        if not family.allows(p):
            raise ValueError(f"{name} expects parts in family {family.value}, got part {p} in {c}")


def _bundle_sizes(lines: DisjointSet) -> Tuple[int, ...]:
    blocks = sorted(lines.subsets(), key=min)
    return tuple(len(b) for b in blocks)


def alpha(c: Composition) -> Composition:
    _require_family(c, RestrictedFamily.ONE_TWO, "alpha")
    lines = DisjointSet(range(c.n + 1))
    x = 0
    for p in c.parts:
        if p == 2:
            lines.merge(x, x + 1)
            lines.merge(x + 1, x + 2)
        x += p
    return Composition(_bundle_sizes(lines))


def alpha_inv(c: Composition) -> Composition:
    _require_family(c, RestrictedFamily.ODD, "alpha_inv")
    if c.n < 2:
        raise ValueError(f"alpha_inv needs a composition of at least 2, got {c}")
    parts: List[int] = []
    for i, bundle in enumerate(c.parts):
        if i:
            parts.append(1)
        parts.extend([2] * (bundle // 2))
    return Composition(tuple(parts))


def beta(c: Composition) -> Composition:
    _require_family(c, RestrictedFamily.ODD, "beta")
    lines = DisjointSet(range(c.n + 1))
    x = 0
    for p in c.parts:
        for i in range(0, p, 2):
            lines.merge(x + i, x + i + 1)
        x += p
    return Composition(_bundle_sizes(lines))


def beta_inv(c: Composition) -> Composition:
    _require_family(c, RestrictedFamily.GREATER_THAN_ONE, "beta_inv")
    # span j joins lines j and j+1; True when both lie in one bundle
    spans: List[bool] = []
    for i, bundle in enumerate(c.parts):
        if i:
            spans.append(False)
        spans.extend([True] * (bundle - 1))

    parts: List[int] = []
    for j, inside in enumerate(spans):
        if j == 0 or (inside and spans[j - 1]):
            parts.append(1)
        else:
            parts[-1] += 1
    return Composition(tuple(parts))
