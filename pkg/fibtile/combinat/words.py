import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from scipy.cluster.hierarchy import DisjointSet

from fibtile.combinat.colorings import (
    ColorScheme,
    ColoredComposition,
    from_board,
    to_board,
)
from fibtile.combinat.core import Board, Composition, ConstraintError

logger = logging.getLogger("words")


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...]
    alphabet_size: int = 3

    def __post_init__(self):
        letters = tuple(self.letters)
        if self.alphabet_size not in (3, 4):
            raise ValueError(f"alphabet size must be 3 or 4, got {self.alphabet_size}")
        for x in letters:
            if not isinstance(x, int) or not 0 <= x < self.alphabet_size:
                raise ValueError(f"letter {x!r} outside alphabet 0..{self.alphabet_size - 1}")
        object.__setattr__(self, "letters", letters)

    @staticmethod
    def parse(text: str, alphabet_size: int = 3) -> "Word":
        if not text.isdigit() and text != "":
            raise ValueError(f"word must be a digit string, got {text!r}")
        return Word(tuple(int(ch) for ch in text), alphabet_size)

    def __str__(self):
        return "".join(str(x) for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def to_json(self):
        return str(self)

    @staticmethod
    def from_json(obj, alphabet_size: int = 3) -> "Word":
        if isinstance(obj, list):
            return Word(tuple(obj), alphabet_size)
        if not isinstance(obj, str):
            raise ValueError("word must be a digit string or an array of letters")
        return Word.parse(obj, alphabet_size)


class WordConstraint(Enum):
    NO_ADJACENT_ZEROS = "no-adjacent-zeros"
    ZERO_RUNS_EVEN = "zero-runs-even"
    ODD_RUNS_FORBIDDEN_12 = "odd-runs-forbidden-12"
    NO_ADJACENT_NONZERO = "no-adjacent-nonzero"
    AVOIDS_01 = "avoids-01"

    @property
    def alphabet_size(self) -> int:
        return 4 if self == WordConstraint.AVOIDS_01 else 3


WORD_SCHEMES = {
    ColorScheme.FIB_PLUS1: WordConstraint.NO_ADJACENT_ZEROS,
    ColorScheme.FIB: WordConstraint.ZERO_RUNS_EVEN,
    ColorScheme.FIB_EVEN: WordConstraint.AVOIDS_01,
}


def word_constraint_for(scheme: ColorScheme) -> Optional[WordConstraint]:
    """Constraint met by colored_to_word images; fib-minus1 words are checked by their stripped form."""
    if scheme == ColorScheme.FIB_ODD:
        raise ValueError("fib-odd colored compositions have no word codec")
    return WORD_SCHEMES.get(scheme)


def _odd_closed_run(letters: Sequence[int], targets, final: bool) -> Optional[int]:
    start = 0
    for i in range(1, len(letters) + 1):
        closed = i == len(letters)
        if closed and not final:
            return None
        if closed or letters[i] != letters[start]:
            if letters[start] in targets and (i - start) % 2:
                return start
            start = i
    return None


def _first_violation(letters: Sequence[int], constraint: WordConstraint, final: bool = True) -> Optional[int]:
    pairs = list(zip(letters, letters[1:]))
    if constraint == WordConstraint.NO_ADJACENT_ZEROS:
        bad = (i + 1 for i, (a, b) in enumerate(pairs) if a == 0 and b == 0)
    elif constraint == WordConstraint.NO_ADJACENT_NONZERO:
        bad = (i + 1 for i, (a, b) in enumerate(pairs) if a and b)
    elif constraint == WordConstraint.AVOIDS_01:
        bad = (i + 1 for i, (a, b) in enumerate(pairs) if a == 0 and b == 1)
    elif constraint == WordConstraint.ZERO_RUNS_EVEN:
        return _odd_closed_run(letters, (0,), final)
    else:
        return _odd_closed_run(letters, (1, 2), final)
    return next(bad, None)


def first_violation(w: Word, c: WordConstraint) -> Optional[int]:
    if w.alphabet_size != c.alphabet_size:
        raise ValueError(f"constraint {c.value} needs alphabet size {c.alphabet_size}, word has {w.alphabet_size}")
    return _first_violation(w.letters, c)


def check_word(w: Word, c: WordConstraint) -> bool:
    return first_violation(w, c) is None


def enumerate_words(c: WordConstraint, length: int) -> Iterator[Word]:
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    letters: List[int] = []

    def extend():
        if len(letters) == length:
            if _first_violation(letters, c) is None:
                yield Word(tuple(letters), c.alphabet_size)
            return
        for x in range(c.alphabet_size):
            letters.append(x)
            if _first_violation(letters, c, final=False) is None:
                yield from extend()
            letters.pop()

    yield from extend()


def _require_scheme(cc: ColoredComposition, schemes, name: str):
    if cc.scheme not in schemes:
        names = ", ".join(s.value for s in schemes)
        raise ValueError(f"{name} expects scheme in {{{names}}}, got {cc.scheme.value}")


def colored_to_word(cc: ColoredComposition) -> Word:
    _require_scheme(cc, (ColorScheme.FIB_PLUS1, ColorScheme.FIB, ColorScheme.FIB_MINUS1, ColorScheme.FIB_EVEN), "colored_to_word")
    board = to_board(cc)
    if cc.scheme != ColorScheme.FIB_EVEN:
        letters = []
        for p in range(1, cc.n):
            letters.append(2 if p in board.solid else 1 if p in board.dotted else 0)
        return Word(tuple(letters), 3)

    # 3 solid, 2 dotted; inside a tile, 1 left of the spot and 0 from it on
    letters = []
    for a, b in board.segments():
        spot = next(s for s in board.spots if a <= s <= b)
        letters.extend(1 if p < spot else 0 for p in range(a, b))
        if b < cc.n:
            letters.append(3 if b in board.solid else 2)
    return Word(tuple(letters), 4)


def word_to_colored(w: Word, scheme: ColorScheme) -> ColoredComposition:
    if scheme == ColorScheme.FIB_ODD:
        raise ValueError("fib-odd colored compositions have no word codec")
    n = len(w) + 1
    if scheme == ColorScheme.FIB_EVEN:
        if w.alphabet_size != 4:
            raise ValueError("fib-even words use the alphabet {0,1,2,3}")
        bad = first_violation(w, WordConstraint.AVOIDS_01)
        if bad is not None:
            raise ConstraintError(f"word {w} contains the factor 01", bad)
        solid = [p + 1 for p, x in enumerate(w.letters) if x == 3]
        dotted = [p + 1 for p, x in enumerate(w.letters) if x == 2]
        spots, start = [], 1
        for p in sorted(solid + dotted) + [n]:
            ones = sum(1 for x in w.letters[start - 1:p - 1] if x == 1)
            spots.append(start + ones)
            start = p + 1
        return from_board(Board.make(n, solid=solid, dotted=dotted, spots=spots), scheme)

    if w.alphabet_size != 3:
        raise ValueError(f"{scheme.value} words use the alphabet {{0,1,2}}")
    constraint = WORD_SCHEMES.get(scheme)
    if constraint is not None:
        bad = first_violation(w, constraint)
        if bad is not None:
            raise ConstraintError(f"word {w} violates {constraint.value}", bad)
    else:
        if not w.letters:
            raise ValueError("fib-minus1 has no colored compositions of 1")
        if w.letters[0] or w.letters[-1]:
            raise ConstraintError(f"fib-minus1 word {w} must begin and end with 0", 0 if w.letters[0] else len(w) - 1)
        bad = first_violation(w, WordConstraint.NO_ADJACENT_NONZERO)
        if bad is not None:
            raise ConstraintError(f"word {w} has adjacent nonzero letters", bad)
    solid = [p + 1 for p, x in enumerate(w.letters) if x == 2]
    dotted = [p + 1 for p, x in enumerate(w.letters) if x == 1]
    return from_board(Board.make(n, solid=solid, dotted=dotted), scheme)


def _require_fib_minus1(cc: ColoredComposition, name: str):
    _require_scheme(cc, (ColorScheme.FIB_MINUS1,), name)


def jacobsthal_comp_a(cc: ColoredComposition) -> Composition:
    """Bundle the n-1 separators of the subdivided board into the parts of a composition of n-1."""
    _require_fib_minus1(cc, "jacobsthal_comp_a")
    board = to_board(cc)
    n = cc.n
    lines = DisjointSet(range(1, n))
    # unit subdivisions do not bundle; dotted joins its left neighbour, solid both neighbours
    for p in board.dotted:
        lines.merge(p - 1, p)
    for p in board.solid:
        lines.merge(p - 1, p)
        lines.merge(p, p + 1)
    blocks = sorted(lines.subsets(), key=min)
    return Composition(tuple(len(b) for b in blocks))


def jacobsthal_comp_a_inv(c: Composition) -> ColoredComposition:
    if c.parts[-1] % 2 == 0:
        raise ValueError(f"jacobsthal_comp_a_inv expects a composition ending with an odd part, got {c}")
    n = c.n + 1
    solid, dotted = [], []
    start = 1
    for bundle in c.parts:
        for r in range(2, bundle + 1, 2):
            p = start + r - 1
            if r == bundle:
                dotted.append(p)
            else:
                solid.append(p)
        start += bundle
    return from_board(Board.make(n, solid=solid, dotted=dotted), ColorScheme.FIB_MINUS1)


def jacobsthal_comp_b(c: Composition) -> Composition:
    if c.parts[-1] % 2 == 0:
        raise ValueError(f"jacobsthal_comp_b expects a composition ending with an odd part, got {c}")
    return Composition(c.parts[:-1] + (c.parts[-1] + 1,))


def jacobsthal_comp_b_inv(c: Composition) -> Composition:
    if c.parts[-1] % 2:
        raise ValueError(f"jacobsthal_comp_b_inv expects a composition ending with an even part, got {c}")
    return Composition(c.parts[:-1] + (c.parts[-1] - 1,))


def jacobsthal_word_c(cc: ColoredComposition) -> Word:
    _require_fib_minus1(cc, "jacobsthal_word_c")
    n = cc.n
    if n < 2:
        raise ValueError(f"jacobsthal_word_c needs n >= 2, got {n}")
    board = to_board(cc)
    cells = [0] * (n + 1)
    for p in board.solid:
        cells[p] = cells[p + 1] = 2
    for p in board.dotted:
        cells[p] = cells[p + 1] = 1
    return Word(tuple(cells[2:n]), 3)


def jacobsthal_word_c_inv(w: Word) -> ColoredComposition:
    bad = first_violation(w, WordConstraint.ODD_RUNS_FORBIDDEN_12)
    if bad is not None:
        raise ConstraintError(f"word {w} has a run of 1s or 2s of odd length", bad)
    n = len(w) + 2
    solid, dotted = [], []
    i = 0
    # pair equal letters greedily from the left; letter i sits on cell i+2
    while i < len(w):
        x = w.letters[i]
        if x:
            (solid if x == 2 else dotted).append(i + 2)
            i += 2
        else:
            i += 1
    return from_board(Board.make(n, solid=solid, dotted=dotted), ColorScheme.FIB_MINUS1)


def jacobsthal_word_d(cc: ColoredComposition) -> Word:
    _require_fib_minus1(cc, "jacobsthal_word_d")
    if cc.n < 3:
        raise ValueError(f"jacobsthal_word_d needs n >= 3, got {cc.n}")
    w = colored_to_word(cc)
    return Word(w.letters[1:-1], 3)


def jacobsthal_word_d_inv(w: Word) -> ColoredComposition:
    bad = first_violation(w, WordConstraint.NO_ADJACENT_NONZERO)
    if bad is not None:
        raise ConstraintError(f"word {w} has adjacent nonzero letters", bad)
    return word_to_colored(Word((0,) + w.letters + (0,), 3), ColorScheme.FIB_MINUS1)
