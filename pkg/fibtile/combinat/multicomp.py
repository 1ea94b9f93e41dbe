import itertools
from dataclasses import dataclass
from typing import Iterator, Tuple

from fibtile.combinat.colorings import SECONDARY_FAMILIES, ColorScheme, ColoredComposition, from_board, to_board
from fibtile.combinat.core import Board, RestrictedFamily, enumerate_family, require_int

SCHEME_FOR_FAMILY = {family: scheme for scheme, family in SECONDARY_FAMILIES.items()}


@dataclass(frozen=True)
class TwoComposition:
    items: Tuple[Tuple[int, int], ...]
    restriction: RestrictedFamily

    def __post_init__(self):
        items = tuple((int(part), int(color)) for part, color in self.items)
        if not items:
            raise ValueError("2-composition must have at least one part")
        if items[0][1] != 1:
            raise ValueError("the first part of a 2-composition has color 1")
        for part, color in items:
            if color not in (1, 2):
                raise ValueError(f"2-composition colors are 1 or 2, got {color}")
            if not self.restriction.allows(part):
                raise ValueError(f"part {part} not allowed in family {self.restriction.value}")
        object.__setattr__(self, "items", items)

    @property
    def n(self) -> int:
        return sum(part for part, _ in self.items)

    def __str__(self):
        return " ".join(f"{part}_{color}" for part, color in self.items)

    def to_json(self):
        return [[part, color] for part, color in self.items]

    @staticmethod
    def from_json(obj, restriction: RestrictedFamily):
        if not isinstance(obj, list):
            raise ValueError("2-composition must be an array of [part, color] pairs")
        for item in obj:
            if not isinstance(item, list) or len(item) != 2:
                raise ValueError(f"2-composition item {item!r} must be a [part, color] pair")
        return TwoComposition(tuple((require_int(p, "part"), require_int(c, "color")) for p, c in obj), restriction)


def _check_pairing(scheme: ColorScheme, restriction: RestrictedFamily):
    if SECONDARY_FAMILIES.get(scheme) != restriction:
        raise ValueError(f"scheme {scheme.value} does not pair with family {restriction.value}")


def colored_to_2comp(cc: ColoredComposition, restriction: RestrictedFamily) -> TwoComposition:
    _check_pairing(cc.scheme, restriction)
    board = to_board(cc)
    items = []
    for first, last in board.segments():
        color = 2 if (first - 1) in board.dotted else 1
        items.append((last - first + 1, color))
    return TwoComposition(tuple(items), restriction)


def colored_from_2comp(t: TwoComposition) -> ColoredComposition:
    scheme = SCHEME_FOR_FAMILY[t.restriction]
    solid, dotted, start = [], [], 0
    for i, (part, color) in enumerate(t.items):
        if i:
            (dotted if color == 2 else solid).append(start)
        start += part
    return from_board(Board.make(t.n, solid=solid, dotted=dotted), scheme)


def enumerate_2comp(restriction: RestrictedFamily, n: int) -> Iterator[TwoComposition]:
    for c in enumerate_family(restriction, n):
        for colors in itertools.product((1, 2), repeat=len(c) - 1):
            yield TwoComposition(tuple(zip(c.parts, (1,) + colors)), restriction)
