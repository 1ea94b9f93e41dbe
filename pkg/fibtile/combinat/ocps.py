"""
Order-consecutive partition sequences and their comma-slash strings.

A comma-slash string writes the symbols 1..n in order with p-1 commas and p-1
slashes placed in the gaps (gap i follows symbol i), alternating from the left
and starting with a comma. The commas cut the symbols into the block sizes;
the symbols between the j-th comma and the j-th slash count the elements the
(j+1)-th block adds below the union so far, and those after the slash count
the elements it adds above.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple, Union

from fibtile.combinat.colorings import ColoredComposition, components, from_components
from fibtile.combinat.core import OracleLimitError, Separator, enumerate_compositions, require_int
from fibtile.combinat.partitions import TotallyNestedPartition

logger = logging.getLogger("ocps")

OCPS_ORACLE_LIMIT = 9


class Mark(Enum):
    COMMA = ","
    SLASH = "/"


Token = Union[int, Mark]


@dataclass(frozen=True)
class Ocps:
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for b in self.blocks:
            for x in b:
                require_int(x, "block element")
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("an order-consecutive partition sequence needs nonempty blocks")
        seen: List[int] = []
        for b in blocks:
            seen.extend(b)
            if len(set(seen)) != len(seen):
                raise ValueError(f"blocks {blocks} are not disjoint")
            if max(seen) - min(seen) + 1 != len(seen):
                raise ValueError(f"prefix union {sorted(seen)} of {blocks} is not an interval")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not cover 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @staticmethod
    def of(blocks) -> "Ocps":
        blocks = tuple(tuple(b) for b in blocks)
        return Ocps(sum(len(b) for b in blocks), blocks)

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks) + ")"

    def to_json(self):
        return [list(b) for b in self.blocks]

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list) or not all(isinstance(b, list) for b in obj):
            raise ValueError("ocps must be an array of arrays of integers")
        return Ocps.of(obj)


@dataclass(frozen=True)
class CommaSlashString:
    n: int
    marks: Tuple[Tuple[int, Mark], ...]

    def __post_init__(self):
        marks = tuple((int(gap), Mark(mark)) for gap, mark in self.marks)
        gaps = [gap for gap, _ in marks]
        if gaps != sorted(gaps) or any(not 1 <= g <= self.n for g in gaps):
            raise ValueError(f"mark gaps {gaps} must be nondecreasing within 1..{self.n}")
        for i, (_, mark) in enumerate(marks):
            expected = Mark.COMMA if i % 2 == 0 else Mark.SLASH
            if mark != expected:
                raise ValueError(f"mark {i + 1} should be {expected.value!r}, got {mark.value!r}")
        if len(marks) % 2:
            raise ValueError("comma and slash counts differ")
        object.__setattr__(self, "marks", marks)

    @staticmethod
    def from_tokens(tokens: List[Token]) -> "CommaSlashString":
        marks, symbol = [], 0
        for tok in tokens:
            if isinstance(tok, Mark):
                marks.append((symbol, tok))
            else:
                symbol += 1
                if tok != symbol:
                    raise ValueError(f"symbols must run 1..n in order, found {tok} at place {symbol}")
        if marks and marks[0][0] == 0:
            raise ValueError("a mark may not precede the first symbol")
        return CommaSlashString(symbol, tuple(marks))

    def tokens(self) -> List[Token]:
        out: List[Token] = []
        marks = list(self.marks)
        k = 0
        for x in range(1, self.n + 1):
            out.append(x)
            while k < len(marks) and marks[k][0] == x:
                out.append(marks[k][1])
                k += 1
        return out

    @staticmethod
    def parse(text: str) -> "CommaSlashString":
        """Compact `12,/3,45/`, its spaced display `12, /3, 45/`, or wide `9 , 10 / 11` once symbols exceed 9."""
        words = text.split()
        wide = len(words) > 1 and all(w in (",", "/") or w.isdigit() for w in words)
        raw = words if wide else list("".join(words))
        tokens: List[Token] = []
        for t in raw:
            if t in (",", "/"):
                tokens.append(Mark(t))
            elif t.isdigit():
                tokens.append(int(t))
            else:
                raise ValueError(f"unexpected token {t!r} in comma-slash string")
        return CommaSlashString.from_tokens(tokens)

    def __str__(self):
        parts = [t.value if isinstance(t, Mark) else str(t) for t in self.tokens()]
        return ("" if self.n <= 9 else " ").join(parts)

    def counts(self) -> Tuple[int, List[Tuple[int, int]]]:
        """First block size and the (below, above) counts each later block adds."""
        tokens = self.tokens()
        first, steps = 0, []
        state = "first"
        for tok in tokens:
            if tok == Mark.COMMA:
                steps.append([0, 0])
                state = "below"
            elif tok == Mark.SLASH:
                state = "above"
            elif state == "first":
                first += 1
            elif state == "below":
                steps[-1][0] += 1
            else:
                steps[-1][1] += 1
        return first, [tuple(s) for s in steps]

    def is_restricted(self) -> bool:
        """No trailing slash, and no comma adjacent to a slash."""
        tokens = self.tokens()
        if tokens and tokens[-1] == Mark.SLASH:
            return False
        return not any(isinstance(a, Mark) and isinstance(b, Mark) for a, b in zip(tokens, tokens[1:]))

    def to_json(self):
        return str(self)

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, str):
            raise ValueError("comma-slash string must be a JSON string")
        return CommaSlashString.parse(obj)


def ocps_encode(o: Ocps) -> CommaSlashString:
    tokens: List[Token] = []
    symbol = 0

    def emit(count: int):
        nonlocal symbol
        for _ in range(count):
            symbol += 1
            tokens.append(symbol)

    emit(len(o.blocks[0]))
    lo, hi = min(o.blocks[0]), max(o.blocks[0])
    for block in o.blocks[1:]:
        below = sum(1 for x in block if x < lo)
        tokens.append(Mark.COMMA)
        emit(below)
        tokens.append(Mark.SLASH)
        emit(len(block) - below)
        lo, hi = min(lo, min(block)), max(hi, max(block))
    return CommaSlashString.from_tokens(tokens)


def ocps_decode(s: CommaSlashString) -> Ocps:
    first, steps = s.counts()
    if first == 0:
        raise ValueError("the first block of a comma-slash string is empty")
    for j, (below, above) in enumerate(steps, start=1):
        if below + above == 0:
            raise ValueError(f"block {j + 1} of {s} is empty")
    total_below = sum(below for below, _ in steps)
    lo, hi = total_below + 1, total_below + first
    blocks = [tuple(range(lo, hi + 1))]
    for below, above in steps:
        blocks.append(tuple(range(lo - below, lo)) + tuple(range(hi + 1, hi + above + 1)))
        lo, hi = lo - below, hi + above
    return Ocps(s.n, tuple(blocks))


def xi(t: TotallyNestedPartition) -> CommaSlashString:
    return ocps_encode(Ocps(t.n, tuple(reversed(t.chain))))


def xi_inv(s: CommaSlashString) -> TotallyNestedPartition:
    if not s.is_restricted():
        raise ValueError(f"{s} ends with a slash or has a comma next to a slash")
    o = ocps_decode(s)
    return TotallyNestedPartition.of(reversed(o.blocks))


def _shifted_tokens(s: CommaSlashString, offset: int) -> List[Token]:
    return [t if isinstance(t, Mark) else t + offset for t in s.tokens()]


def colored_to_ocps(cc: ColoredComposition) -> Ocps:
    # red marks the slash of a dotted junction until it has been slid
    tokens: List[Token] = []
    red: List[bool] = []
    offset = 0
    for comp, junction in components(cc):
        if junction is not None:
            tokens += [Mark.COMMA, Mark.SLASH]
            red += [False, junction == Separator.DOTTED]
        shifted = _shifted_tokens(xi(comp), offset)
        tokens += shifted
        red += [False] * len(shifted)
        offset += comp.n

    i = 0
    while i < len(tokens):
        if not red[i]:
            i += 1
            continue
        j = i + 1
        while j < len(tokens) and not isinstance(tokens[j], Mark):
            j += 1
        if j < len(tokens) and tokens[j] == Mark.SLASH:
            raise ValueError(f"sliding the slash at token {i} would cross another slash")
        tokens.insert(j - 1, tokens.pop(i))
        red.pop(i)
        red.insert(j - 1, False)
        i = j
    return ocps_decode(CommaSlashString.from_tokens(tokens))


def colored_from_ocps(o: Ocps) -> ColoredComposition:
    tokens = ocps_encode(o).tokens()
    dotted_commas = []

    # a slash right before a comma or at the end was slid from a dotted junction
    i = 0
    while i < len(tokens):
        if tokens[i] == Mark.SLASH and (i == len(tokens) - 1 or tokens[i + 1] == Mark.COMMA):
            j = i - 1
            while j >= 0 and not isinstance(tokens[j], Mark):
                j -= 1
            if j < 0 or tokens[j] != Mark.COMMA:
                raise ValueError(f"slash at token {i} of {ocps_encode(o)} has no comma to return to")
            tokens.insert(j + 1, tokens.pop(i))
            dotted_commas.append(j)
        i += 1

    chain = []
    current: List[Token] = []
    junction: Optional[Separator] = None
    i = 0
    while i <= len(tokens):
        at_end = i == len(tokens)
        if at_end or (tokens[i] == Mark.COMMA and i + 1 < len(tokens) and tokens[i + 1] == Mark.SLASH):
            chain.append((_component(current), junction))
            if at_end:
                break
            junction = Separator.DOTTED if i in dotted_commas else Separator.SOLID
            current = []
            i += 2
            continue
        current.append(tokens[i])
        i += 1
    return from_components(chain)


def _component(tokens: List[Token]) -> TotallyNestedPartition:
    symbols = [t for t in tokens if not isinstance(t, Mark)]
    offset = symbols[0] - 1
    local = [t if isinstance(t, Mark) else t - offset for t in tokens]
    return xi_inv(CommaSlashString.from_tokens(local))


def _ocps_sequences(n: int, lo: int, hi: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    if lo == 1 and hi == n:
        yield ()
        return
    for below in range(lo):
        for above in range(n - hi + 1):
            if below + above == 0:
                continue
            block = tuple(range(lo - below, lo)) + tuple(range(hi + 1, hi + above + 1))
            for rest in _ocps_sequences(n, lo - below, hi + above):
                yield (block,) + rest


def enumerate_ocps(n: int) -> Iterator[Ocps]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > OCPS_ORACLE_LIMIT:
        raise OracleLimitError("enumerate_ocps", n, OCPS_ORACLE_LIMIT)
    found = []
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            first = tuple(range(lo, hi + 1))
            for rest in _ocps_sequences(n, lo, hi):
                found.append((first,) + rest)
    for blocks in sorted(found):
        yield Ocps(n, blocks)


def enumerate_comma_slash(n: int) -> Iterator[CommaSlashString]:
    """Every valid comma-slash string on n symbols."""
    for sizes in enumerate_compositions(n):

        def splits(rest):
            if not rest:
                yield ()
                return
            for below in range(rest[0] + 1):
                for tail in splits(rest[1:]):
                    yield ((below, rest[0] - below),) + tail

        for steps in splits(sizes.parts[1:]):
            tokens: List[Token] = []
            symbol = 0
            for _ in range(sizes.parts[0]):
                symbol += 1
                tokens.append(symbol)
            for below, above in steps:
                tokens.append(Mark.COMMA)
                for _ in range(below):
                    symbol += 1
                    tokens.append(symbol)
                tokens.append(Mark.SLASH)
                for _ in range(above):
                    symbol += 1
                    tokens.append(symbol)
            yield CommaSlashString.from_tokens(tokens)
