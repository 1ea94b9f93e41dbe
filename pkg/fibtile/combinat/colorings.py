import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from fibtile.combinat.core import (
    Board,
    Composition,
    RestrictedFamily,
    Separator,
    enumerate_compositions,
    enumerate_family,
    fibonacci,
    require_int,
)
from fibtile.combinat.partitions import (
    TotallyNestedPartition,
    arc_diagram,
    enumerate_totally_nested,
)
from fibtile.combinat.series import CoeffSeq, invert_transform

logger = logging.getLogger("colorings")


class ColorScheme(Enum):
    FIB_PLUS1 = "fib-plus1"
    FIB = "fib"
    FIB_MINUS1 = "fib-minus1"
    FIB_EVEN = "fib-even"
    FIB_ODD = "fib-odd"

    @property
    def family(self) -> Optional[RestrictedFamily]:
        return SECONDARY_FAMILIES.get(self)

    def color_count(self, k: int) -> int:
        return color_count(self, k)


SECONDARY_FAMILIES = {
    ColorScheme.FIB_PLUS1: RestrictedFamily.ONE_TWO,
    ColorScheme.FIB: RestrictedFamily.ODD,
    ColorScheme.FIB_MINUS1: RestrictedFamily.GREATER_THAN_ONE,
}


@dataclass(frozen=True)
class SecondaryTiling:
    tiling: Composition

    @property
    def size(self) -> int:
        return self.tiling.n

    def key(self):
        return self.tiling.parts

    def to_json(self):
        return self.tiling.to_json()


@dataclass(frozen=True)
class SpottedTiling:
    tiles: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        tiles = tuple(self.tiles)
        for tile in tiles:
            if not isinstance(tile, tuple) or len(tile) != 2:
                raise ValueError(f"tile {tile!r} must be a (length, spot) pair")
            require_int(tile[0], "tile length")
            require_int(tile[1], "spot")
        if not tiles:
            raise ValueError("spotted tiling must have at least one tile")
        for length, spot in tiles:
            if length < 1 or not 1 <= spot <= length:
                raise ValueError(f"spot {spot} must lie within a tile of length {length}")
        object.__setattr__(self, "tiles", tiles)

    @property
    def size(self) -> int:
        return sum(length for length, _ in self.tiles)

    def key(self):
        return self.tiles

    def to_json(self):
        return [[length, spot] for length, spot in self.tiles]


@dataclass(frozen=True)
class DecoratedTiles:
    """Totally nested partitions on consecutive tiles of one part; they meet at dotted junctions."""

    components: Tuple[TotallyNestedPartition, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise ValueError("decorated tiles must have at least one component")
        for c in components:
            if not isinstance(c, TotallyNestedPartition):
                raise ValueError(f"component {c!r} is not a totally nested partition")
        object.__setattr__(self, "components", components)

    @property
    def size(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def junctions(self) -> Tuple[Separator, ...]:
        return (Separator.DOTTED,) * (len(self.components) - 1)

    def key(self):
        return tuple(c.blocks for c in self.components)

    def to_json(self):
        out = []
        for i, c in enumerate(self.components):
            item = {"partition": c.to_json()}
            if i < len(self.components) - 1:
                item["junction"] = Separator.DOTTED.value
            out.append(item)
        return out


Payload = Union[SecondaryTiling, SpottedTiling, DecoratedTiles]


@dataclass(frozen=True)
class Color:
    scheme: ColorScheme
    payload: Payload

    def __post_init__(self):
        family = self.scheme.family
        if family is not None:
            if not isinstance(self.payload, SecondaryTiling):
                raise ValueError(f"scheme {self.scheme.value} colors are secondary tilings")
            for p in self.payload.tiling.parts:
                if not family.allows(p):
                    raise ValueError(f"secondary tile {p} not allowed in scheme {self.scheme.value}")
        elif self.scheme == ColorScheme.FIB_EVEN and not isinstance(self.payload, SpottedTiling):
            raise ValueError("fib-even colors are spotted tilings")
        elif self.scheme == ColorScheme.FIB_ODD and not isinstance(self.payload, DecoratedTiles):
            raise ValueError("fib-odd colors are decorated tiles")

    @property
    def size(self) -> int:
        return self.payload.size

    def to_json(self):
        return self.payload.to_json()

    @staticmethod
    def from_json(scheme: ColorScheme, obj) -> "Color":
        if scheme.family is not None:
            return Color(scheme, SecondaryTiling(Composition.from_json(obj)))
        if scheme == ColorScheme.FIB_EVEN:
            if not isinstance(obj, list):
                raise ValueError("spotted tiling must be an array of [length, spot] pairs")
            for t in obj:
                if not isinstance(t, list) or len(t) != 2:
                    raise ValueError(f"tile {t!r} must be a [length, spot] pair")
            return Color(scheme, SpottedTiling(tuple(tuple(t) for t in obj)))
        if not isinstance(obj, list):
            raise ValueError("decorated tiles must be an array of components")
        components = []
        for i, item in enumerate(obj):
            if not isinstance(item, dict) or "partition" not in item:
                raise ValueError(f"component {item!r} must be an object with a 'partition' field")
            if i < len(obj) - 1 and item.get("junction", Separator.DOTTED.value) != Separator.DOTTED.value:
                raise ValueError("components inside one part meet at dotted junctions only")
            components.append(TotallyNestedPartition.from_json(item["partition"]))
        return Color(scheme, DecoratedTiles(tuple(components)))


@dataclass(frozen=True)
class ColoredComposition:
    scheme: ColorScheme
    items: Tuple[Tuple[int, Color], ...]

    def __post_init__(self):
        items = tuple((int(part), color) for part, color in self.items)
        if not items:
            raise ValueError("colored composition must have at least one part")
        for part, color in items:
            if color.scheme != self.scheme:
                raise ValueError(f"color scheme {color.scheme.value} does not match {self.scheme.value}")
            if color.size != part:
                raise ValueError(f"color of size {color.size} does not fit part {part}")
        object.__setattr__(self, "items", items)

    @staticmethod
    def of(scheme: ColorScheme, payloads) -> "ColoredComposition":
        colors = [Color(scheme, p) for p in payloads]
        return ColoredComposition(scheme, tuple((c.size, c) for c in colors))

    @property
    def n(self) -> int:
        return sum(part for part, _ in self.items)

    @property
    def composition(self) -> Composition:
        return Composition(tuple(part for part, _ in self.items))

    @property
    def colors(self) -> Tuple[Color, ...]:
        return tuple(color for _, color in self.items)

    def key(self):
        return (self.composition.parts, tuple(c.payload.key() for c in self.colors))

    def to_json(self):
        return {
            "scheme": self.scheme.value,
            "parts": [{"size": part, "color": color.to_json()} for part, color in self.items],
        }

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict) or "scheme" not in obj or "parts" not in obj:
            raise ValueError("colored composition must be an object with 'scheme' and 'parts'")
        scheme = ColorScheme(obj["scheme"])
        if not isinstance(obj["parts"], list):
            raise ValueError("'parts' must be an array")
        items = []
        for item in obj["parts"]:
            if not isinstance(item, dict) or "color" not in item:
                raise ValueError(f"part {item!r} must be an object with a 'color' field")
            color = Color.from_json(scheme, item["color"])
            items.append((require_int(item.get("size", color.size), "part size"), color))
        return ColoredComposition(scheme, tuple(items))


def color_count(scheme: ColorScheme, k: int) -> int:
    if k < 1:
        raise ValueError(f"part size must be positive, got {k}")
    return {
        ColorScheme.FIB_PLUS1: lambda: fibonacci(k + 1),
        ColorScheme.FIB: lambda: fibonacci(k),
        ColorScheme.FIB_MINUS1: lambda: fibonacci(k - 1),
        ColorScheme.FIB_EVEN: lambda: fibonacci(2 * k),
        ColorScheme.FIB_ODD: lambda: fibonacci(2 * k - 1),
    }[scheme]()


def _spotted_tilings(k: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    if k == 0:
        yield ()
        return
    for length in range(1, k + 1):
        for spot in range(1, length + 1):
            for rest in _spotted_tilings(k - length):
                yield ((length, spot),) + rest


def _decorated_tiles(k: int) -> Iterator[Tuple[TotallyNestedPartition, ...]]:
    if k == 0:
        yield ()
        return
    for size in range(1, k + 1):
        for first in enumerate_totally_nested(size):
            for rest in _decorated_tiles(k - size):
                yield (first,) + rest


@lru_cache(maxsize=None)
def _colors(scheme: ColorScheme, k: int) -> Tuple[Color, ...]:
    if scheme.family is not None:
        payloads = [SecondaryTiling(c) for c in enumerate_family(scheme.family, k)]
    elif scheme == ColorScheme.FIB_EVEN:
        payloads = [SpottedTiling(t) for t in _spotted_tilings(k)]
    else:
        payloads = sorted((DecoratedTiles(t) for t in _decorated_tiles(k)), key=lambda d: d.key())
    return tuple(Color(scheme, p) for p in payloads)


def enumerate_colors(scheme: ColorScheme, k: int) -> Iterator[Color]:
    if k < 1:
        raise ValueError(f"part size must be positive, got {k}")
    yield from _colors(scheme, k)


def enumerate_colored(scheme: ColorScheme, n: int) -> Iterator[ColoredComposition]:
    for c in enumerate_compositions(n):
        choices = [_colors(scheme, k) for k in c.parts]
        for colors in itertools.product(*choices):
            yield ColoredComposition(scheme, tuple(zip(c.parts, colors)))


def scheme_color_counts(scheme: ColorScheme, N: int) -> CoeffSeq:
    return CoeffSeq(tuple(color_count(scheme, k) for k in range(1, N + 1)))


def count_colored(scheme: ColorScheme, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return invert_transform(scheme_color_counts(scheme, n)).coefficient(n)


def colored_index(cc: ColoredComposition) -> int:
    """Position of cc in the canonical order of enumerate_colored."""
    index = 0
    target = cc.composition
    for c in enumerate_compositions(cc.n):
        if c == target:
            break
        total = 1
        for k in c.parts:
            total *= color_count(cc.scheme, k)
        index += total
    # mixed-radix rank of the colors inside the composition
    rank = 0
    for part, color in cc.items:
        choices = _colors(cc.scheme, part)
        rank = rank * len(choices) + choices.index(color)
    return index + rank


def colored_at(scheme: ColorScheme, n: int, index: int) -> ColoredComposition:
    if index < 0:
        raise ValueError(f"index must be nonnegative, got {index}")
    remaining = index
    for c in enumerate_compositions(n):
        choices = [_colors(scheme, k) for k in c.parts]
        total = 1
        for ch in choices:
            total *= len(ch)
        if remaining < total:
            colors = []
            for ch in reversed(choices):
                remaining, r = divmod(remaining, len(ch))
                colors.append(ch[r])
            return ColoredComposition(scheme, tuple(zip(c.parts, reversed(colors))))
        remaining -= total
    raise ValueError(f"index {index} outside the {count_colored(scheme, n)} colored compositions of {n}")


def _flatten(cc: ColoredComposition):
    """Yield (first cell, last cell, left separator) per secondary tile."""
    start = 1
    for i, (part, color) in enumerate(cc.items):
        payload = color.payload
        if isinstance(payload, SecondaryTiling):
            lengths = payload.tiling.parts
        elif isinstance(payload, SpottedTiling):
            lengths = [length for length, _ in payload.tiles]
        else:
            lengths = [c.n for c in payload.components]
        for j, length in enumerate(lengths):
            if j:
                left = Separator.DOTTED
            elif i:
                left = Separator.SOLID
            else:
                left = None
            yield start, start + length - 1, left
            start += length


def components(cc: ColoredComposition) -> List[Tuple[TotallyNestedPartition, Optional[Separator]]]:
    """The chain of totally nested components of a fib-odd colored composition, each with the junction on its left."""
    if cc.scheme != ColorScheme.FIB_ODD:
        raise ValueError(f"only fib-odd colored compositions carry decorated tiles, got {cc.scheme.value}")
    out = []
    for i, color in enumerate(cc.colors):
        for j, comp in enumerate(color.payload.components):
            left = Separator.DOTTED if j else (Separator.SOLID if i else None)
            out.append((comp, left))
    return out


def from_components(chain: List[Tuple[TotallyNestedPartition, Optional[Separator]]]) -> ColoredComposition:
    groups: List[List[TotallyNestedPartition]] = []
    for comp, left in chain:
        if left == Separator.DOTTED:
            groups[-1].append(comp)
        else:
            groups.append([comp])
    return ColoredComposition.of(ColorScheme.FIB_ODD, [DecoratedTiles(tuple(g)) for g in groups])


def to_board(cc: ColoredComposition) -> Board:
    solid, dotted, spots, arcs = [], [], [], []
    for first, _, left in _flatten(cc):
        if left == Separator.SOLID:
            solid.append(first - 1)
        elif left == Separator.DOTTED:
            dotted.append(first - 1)

    if cc.scheme in (ColorScheme.FIB_EVEN, ColorScheme.FIB_ODD):
        start = 1
        for color in cc.colors:
            payload = color.payload
            if isinstance(payload, SpottedTiling):
                for length, spot in payload.tiles:
                    spots.append(start + spot - 1)
                    start += length
            else:
                for comp in payload.components:
                    arcs.extend((i + start - 1, j + start - 1) for i, j in arc_diagram(comp))
                    start += comp.n
    return Board.make(cc.n, solid=solid, dotted=dotted, spots=spots, arcs=arcs)


def _segment_partition(board: Board, first: int, last: int) -> TotallyNestedPartition:
    blocks = {x: [x] for x in range(first, last + 1)}
    for i, j in sorted(board.arcs):
        if first <= i <= last or first <= j <= last:
            if not (first <= i and j <= last):
                raise ValueError(f"arc ({i},{j}) crosses the tile boundary of cells {first}..{last}")
            blocks[j] = blocks[i]
            blocks[i].append(j)
    unique = {id(b): b for b in blocks.values()}.values()
    local = [tuple(x - first + 1 for x in b) for b in unique]
    comp = TotallyNestedPartition.of(local)
    inside = sorted((i - first + 1, j - first + 1) for i, j in board.arcs if first <= i and j <= last)
    if arc_diagram(comp) != inside:
        raise ValueError(f"arcs on cells {first}..{last} do not join consecutive block elements")
    return comp


def from_board(board: Board, scheme: ColorScheme) -> ColoredComposition:
    payloads = []
    for part_first, part_last in board.parts():
        tiles = [(a, b) for a, b in board.segments() if part_first <= a and b <= part_last]
        if scheme.family is not None:
            if board.spots or board.arcs:
                raise ValueError(f"{scheme.value} boards carry no spots or arcs")
            payloads.append(SecondaryTiling(Composition(tuple(b - a + 1 for a, b in tiles))))
        elif scheme == ColorScheme.FIB_EVEN:
            spotted = []
            for a, b in tiles:
                inside = [s for s in board.spots if a <= s <= b]
                if len(inside) != 1:
                    raise ValueError(f"tile {a}..{b} must hold exactly one spot, found {len(inside)}")
                spotted.append((b - a + 1, inside[0] - a + 1))
            payloads.append(SpottedTiling(tuple(spotted)))
        else:
            if board.spots:
                raise ValueError("fib-odd boards carry arcs, not spots")
            payloads.append(DecoratedTiles(tuple(_segment_partition(board, a, b) for a, b in tiles)))
    return ColoredComposition.of(scheme, payloads)
