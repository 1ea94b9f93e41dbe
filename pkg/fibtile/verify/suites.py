"""
Verification suites.

Each suite checks one family of bijections or count identities up to a size
bound and reports a Status. Bijections are checked the same way everywhere:
the forward map is injective on the enumerated domain, its image equals an
independently enumerated codomain, and the inverse undoes it.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List

from fibtile.combinat.colorings import (
    ColoredComposition,
    ColorScheme,
    DecoratedTiles,
    SECONDARY_FAMILIES,
    SecondaryTiling,
    SpottedTiling,
    colored_at,
    count_colored,
    enumerate_colored,
    from_board,
    scheme_color_counts,
    to_board,
)
from fibtile.combinat.core import (
    Board,
    Composition,
    OracleLimitError,
    RestrictedFamily,
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    enumerate_ending,
    enumerate_family,
    fibonacci,
)
from fibtile.combinat.ladder import (
    LadderSpanningTree,
    bottom,
    colored_to_tree,
    count_trees,
    enumerate_trees,
    is_spanning_tree,
    ladder_edges,
    top,
    tree_to_colored,
    vert,
)
from fibtile.combinat.multicomp import colored_from_2comp, colored_to_2comp, enumerate_2comp
from fibtile.combinat.ocps import (
    CommaSlashString,
    Ocps,
    colored_from_ocps,
    colored_to_ocps,
    enumerate_comma_slash,
    enumerate_ocps,
    ocps_decode,
    ocps_encode,
    xi,
    xi_inv,
)
from fibtile.combinat.partitions import (
    SetPartition,
    TotallyNestedPartition,
    classify,
    enumerate_ncn,
    enumerate_ncn_indecomposable,
    enumerate_set_partitions,
    enumerate_totally_nested,
    lemma_join,
    lemma_split,
    ncn_counts,
    ncn_indecomposable_count,
    phi,
    phi_inv,
)
from fibtile.combinat.series import invert_transform, linear_recurrence_check, rational_coeffs
from fibtile.combinat.unimodal import (
    Side,
    UnimodalSeq,
    colored_to_unimodal,
    enumerate_unimodal,
    oplus,
    psi,
    psi_inv,
    unimodal_to_colored,
)
from fibtile.combinat.words import (
    Word,
    WordConstraint,
    colored_to_word,
    enumerate_words,
    jacobsthal_comp_a,
    jacobsthal_comp_a_inv,
    jacobsthal_comp_b,
    jacobsthal_comp_b_inv,
    jacobsthal_word_c,
    jacobsthal_word_c_inv,
    jacobsthal_word_d,
    jacobsthal_word_d_inv,
    word_constraint_for,
    word_to_colored,
)
from fibtile.verify.status import Status, StatusCode

logger = logging.getLogger("verify")

PUBLISHED_PREFIXES = {
    ColorScheme.FIB_PLUS1: (1, 3, 8, 22, 60, 164, 448),
    ColorScheme.FIB: (1, 2, 5, 12, 29, 70),
    ColorScheme.FIB_EVEN: (1, 4, 15, 56, 209, 780, 2911, 10864),
    ColorScheme.FIB_ODD: (1, 3, 10, 34, 116, 396, 1352, 4616),
}

# a(n) = c1 a(n-1) + c2 a(n-2)
RECURRENCES = {
    ColorScheme.FIB_PLUS1: (2, 2),
    ColorScheme.FIB: (2, 1),
    ColorScheme.FIB_MINUS1: (1, 2),
    ColorScheme.FIB_EVEN: (4, -1),
    ColorScheme.FIB_ODD: (4, -2),
}

SAMPLE_SIZE = 10_000
EXHAUSTIVE_TREE_LIMIT = 6


class CheckFailure(Exception):
    pass


def expect(condition: bool, message: str):
    if not condition:
        raise CheckFailure(message)


def check_bijection(name: str, domain: Iterable, forward: Callable, inverse: Callable, codomain: Iterable) -> int:
    images: Dict = {}
    for x in domain:
        y = forward(x)
        expect(y not in images, f"{name}: {x} and {images.get(y)} share the image {y}")
        images[y] = x
        back = inverse(y)
        expect(back == x, f"{name}: inverse sends {y} to {back}, expected {x}")
    oracle = set(codomain)
    missing = oracle - images.keys()
    extra = images.keys() - oracle
    expect(not missing, f"{name}: {len(missing)} oracle elements are never hit, e.g. {next(iter(missing), None)}")
    expect(not extra, f"{name}: {len(extra)} images fall outside the oracle, e.g. {next(iter(extra), None)}")
    return len(images)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_max_n: int
    check: Callable[[int], str]
    min_n: int = 1

    def run(self, max_n: int) -> Status:
        if max_n < self.min_n:
            return Status(StatusCode.SKIPPED, f"needs n >= {self.min_n}, limit is {max_n}")
        try:
            summary = self.check(max_n)
        except OracleLimitError as e:
            return Status.log(StatusCode.ERROR, f"{self.name}: {e}")
        except (CheckFailure, ValueError) as e:
            return Status.log(StatusCode.FAILED, f"{self.name}: {e}")
        except Exception as e:
            return Status.log(StatusCode.ERROR, f"{self.name}: unexpected {type(e).__name__}: {e}")
        return Status(StatusCode.OK, summary)


def check_count_tables(max_n: int) -> str:
    for scheme in ColorScheme:
        for n in range(1, max_n + 1):
            enumerated = sum(1 for _ in enumerate_colored(scheme, n))
            counted = count_colored(scheme, n)
            expect(enumerated == counted, f"{scheme.value} n={n}: enumerated {enumerated}, INVERT gives {counted}")
            prefix = PUBLISHED_PREFIXES.get(scheme, ())
            if n <= len(prefix):
                expect(counted == prefix[n - 1], f"{scheme.value} n={n}: count {counted}, published {prefix[n - 1]}")
    return f"enumeration matches INVERT for {len(ColorScheme)} schemes, n <= {max_n}"


def check_board_roundtrip(max_n: int) -> str:
    total = 0
    for scheme in ColorScheme:
        for n in range(1, max_n + 1):
            for cc in enumerate_colored(scheme, n):
                board = to_board(cc)
                back = from_board(board, scheme)
                expect(back == cc, f"{scheme.value} n={n}: board {board.to_json()} reads back as {back.to_json()}")
                total += 1
    return f"{total} colored compositions round-trip through their boards, n <= {max_n}"


def check_restricted_families(max_n: int) -> str:
    for family in RestrictedFamily:
        for n in range(1, max_n + 1):
            got = sum(1 for _ in enumerate_family(family, n))
            expect(got == family.expected_count(n), f"{family.value} n={n}: {got} compositions, expected {family.expected_count(n)}")
    return f"family sizes are Fibonacci numbers for n <= {max_n}"


def check_alpha_beta(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        total += check_bijection(
            f"alpha n={n}",
            enumerate_family(RestrictedFamily.ONE_TWO, n),
            alpha,
            alpha_inv,
            enumerate_family(RestrictedFamily.ODD, n + 1),
        )
        total += check_bijection(
            f"beta n={n}",
            enumerate_family(RestrictedFamily.ODD, n),
            beta,
            beta_inv,
            enumerate_family(RestrictedFamily.GREATER_THAN_ONE, n + 1),
        )
    return f"{total} compositions round-trip through alpha and beta"


def _minus1_words(n: int) -> List[Word]:
    return [
        w
        for w in enumerate_words(WordConstraint.NO_ADJACENT_NONZERO, n - 1)
        if w.letters and w.letters[0] == 0 and w.letters[-1] == 0
    ]


def _word_codec(scheme: ColorScheme, max_n: int) -> int:
    total = 0
    for n in range(1, max_n + 1):
        constraint = word_constraint_for(scheme)
        codomain = enumerate_words(constraint, n - 1) if constraint else _minus1_words(n)
        total += check_bijection(
            f"{scheme.value} words n={n}",
            enumerate_colored(scheme, n),
            colored_to_word,
            lambda w: word_to_colored(w, scheme),
            codomain,
        )
    return total


def check_word_codecs(max_n: int) -> str:
    total = sum(_word_codec(s, max_n) for s in (ColorScheme.FIB_PLUS1, ColorScheme.FIB, ColorScheme.FIB_MINUS1))
    return f"{total} ternary words round-trip, n <= {max_n}"


def check_spot_words(max_n: int) -> str:
    return f"{_word_codec(ColorScheme.FIB_EVEN, max_n)} quaternary words round-trip, n <= {max_n}"


def check_jacobsthal(max_n: int) -> str:
    total = 0
    for n in range(2, max_n + 1):
        total += check_bijection(
            f"composition map n={n}",
            enumerate_colored(ColorScheme.FIB_MINUS1, n),
            jacobsthal_comp_a,
            jacobsthal_comp_a_inv,
            enumerate_ending(n - 1, "odd"),
        )
        total += check_bijection(
            f"last-part shift n={n}",
            enumerate_ending(n - 1, "odd"),
            jacobsthal_comp_b,
            jacobsthal_comp_b_inv,
            enumerate_ending(n, "even"),
        )
        total += check_bijection(
            f"paired-run words n={n}",
            enumerate_colored(ColorScheme.FIB_MINUS1, n),
            jacobsthal_word_c,
            jacobsthal_word_c_inv,
            enumerate_words(WordConstraint.ODD_RUNS_FORBIDDEN_12, n - 2),
        )
        if n >= 3:
            total += check_bijection(
                f"stripped words n={n}",
                enumerate_colored(ColorScheme.FIB_MINUS1, n),
                jacobsthal_word_d,
                jacobsthal_word_d_inv,
                enumerate_words(WordConstraint.NO_ADJACENT_NONZERO, n - 3),
            )
    return f"{total} objects round-trip through the four Jacobsthal maps, n <= {max_n}"


def check_ladder_trees(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        total += check_bijection(
            f"ladder trees n={n}",
            enumerate_colored(ColorScheme.FIB_EVEN, n),
            colored_to_tree,
            tree_to_colored,
            enumerate_trees(n),
        )
    return f"{total} spanning trees match the brute-force oracle, n <= {max_n}"


def check_tree_outputs(max_n: int) -> str:
    checked = 0
    for n in range(1, max_n + 1):
        if n <= EXHAUSTIVE_TREE_LIMIT:
            sample = enumerate_colored(ColorScheme.FIB_EVEN, n)
        else:
            rng = random.Random(n)
            size = count_colored(ColorScheme.FIB_EVEN, n)
            sample = (colored_at(ColorScheme.FIB_EVEN, n, rng.randrange(size)) for _ in range(SAMPLE_SIZE))
        for cc in sample:
            t = colored_to_tree(cc)
            expect(is_spanning_tree(t), f"n={n}: {[str(e) for e in sorted(t.edges)]} is not a spanning tree")
            checked += 1
    return f"{checked} images are spanning trees, n <= {max_n}"


def check_matrix_tree(max_n: int) -> str:
    for n in range(1, max_n + 1):
        got, want = count_trees(n), count_colored(ColorScheme.FIB_EVEN, n)
        expect(got == want, f"n={n}: matrix-tree count {got}, colored count {want}")
    return f"Laplacian cofactors match fib-even counts, n <= {max_n}"


def _is_ncn(p: SetPartition) -> bool:
    flags = classify(p)
    return not flags.crossing and not flags.nesting


def check_phi(max_n: int) -> str:
    total = 0
    ncn_totals = ncn_counts(max_n)
    for n in range(1, max_n + 1):
        partitions = list(enumerate_set_partitions(n))
        ncn = [p for p in partitions if _is_ncn(p)]
        expect(len(ncn) == fibonacci(2 * n - 1), f"n={n}: {len(ncn)} noncrossing nonnesting partitions, expected F(2n-1)")
        expect(len(ncn) == ncn_totals[n - 1], f"n={n}: INVERT of the indecomposable counts gives {ncn_totals[n - 1]}")
        expect(set(ncn) == set(enumerate_ncn(n)), f"n={n}: pruned generation disagrees with filtering")

        tn = [TotallyNestedPartition(p.n, p.blocks) for p in partitions if classify(p).totally_nested]
        expect(set(tn) == set(enumerate_totally_nested(n)), f"n={n}: totally nested generation disagrees with filtering")
        for t in tn:
            flags = classify(t)
            expect(flags.indecomposable and not flags.crossing, f"{t} is totally nested but crossing or decomposable")

        domain = [p for p in ncn if classify(p).indecomposable]
        total += check_bijection(f"phi n={n}", domain, phi, phi_inv, tn)
    return f"{total} partitions round-trip through phi, n <= {max_n}"


def check_ncn_lemma(max_n: int) -> str:
    counts = {1: 1, 2: 1}
    for n in range(3, max_n + 1):
        domain = list(enumerate_ncn_indecomposable(n))
        counts[n] = len(domain)
        expect(counts[n] == 2 * counts[n - 1], f"n={n}: {counts[n]} indecomposable partitions, twice n-1 gives {2 * counts[n - 1]}")
        expect(counts[n] == ncn_indecomposable_count(n), f"n={n}: closed form gives {ncn_indecomposable_count(n)}")
        smaller = list(enumerate_ncn_indecomposable(n - 1))
        check_bijection(
            f"lemma n={n}",
            domain,
            lemma_split,
            lambda qs: lemma_join(*qs),
            itertools.product(smaller, ("singleton", "merged")),
        )
    return f"indecomposable counts double for 3 <= n <= {max_n}"


def check_psi(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        tn_seqs = [u for u in enumerate_unimodal(n) if u.is_tn]
        total += check_bijection(f"psi n={n}", enumerate_totally_nested(n), psi, psi_inv, tn_seqs)
    return f"{total} totally nested partitions round-trip through psi, n <= {max_n}"


def check_unimodal(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        oracle = list(enumerate_unimodal(n))
        expect(len(oracle) == count_colored(ColorScheme.FIB_ODD, n), f"n={n}: {len(oracle)} unimodal sequences")
        # peeling raises on zero or several candidate splits, so this asserts uniqueness
        total += check_bijection(
            f"unimodal n={n}",
            enumerate_colored(ColorScheme.FIB_ODD, n),
            colored_to_unimodal,
            unimodal_to_colored,
            oracle,
        )
    return f"{total} sequences peel unambiguously and round-trip, n <= {max_n}"


def check_oplus_associativity(max_n: int) -> str:
    by_size = {k: [psi(t) for t in enumerate_totally_nested(k)] for k in range(1, max_n - 1)}
    total = 0
    for a, b, c in itertools.product(range(1, max_n - 1), repeat=3):
        if a + b + c > max_n:
            continue
        for x, y, z in itertools.product(by_size[a], by_size[b], by_size[c]):
            for s, t in itertools.product(Side, repeat=2):
                left, right = oplus(oplus(x, y, s), z, t), oplus(x, oplus(y, z, t), s)
                expect(left == right, f"({x} {s.value} {y}) {t.value} {z} is {left}, grouped right it is {right}")
                total += 1
    return f"{total} insertion triples associate, total size <= {max_n}"


def check_xi(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        restricted = [s for s in enumerate_comma_slash(n) if s.is_restricted()]
        total += check_bijection(f"xi n={n}", enumerate_totally_nested(n), xi, xi_inv, restricted)
    return f"{total} totally nested partitions round-trip through xi, n <= {max_n}"


def check_ocps(max_n: int) -> str:
    total = 0
    for n in range(1, max_n + 1):
        oracle = list(enumerate_ocps(n))
        check_bijection(f"comma-slash n={n}", oracle, ocps_encode, ocps_decode, enumerate_comma_slash(n))
        # a slide that would cross another slash raises inside colored_to_ocps
        total += check_bijection(
            f"ocps n={n}",
            enumerate_colored(ColorScheme.FIB_ODD, n),
            colored_to_ocps,
            colored_from_ocps,
            oracle,
        )
    return f"{total} colored compositions round-trip through ocps without crossing slides, n <= {max_n}"


def check_two_comp(max_n: int) -> str:
    total = 0
    for scheme, family in SECONDARY_FAMILIES.items():
        for n in range(1, max_n + 1):
            total += check_bijection(
                f"{scheme.value} 2-compositions n={n}",
                enumerate_colored(scheme, n),
                lambda cc: colored_to_2comp(cc, family),
                colored_from_2comp,
                enumerate_2comp(family, n),
            )
    return f"{total} colored compositions round-trip through 2-compositions, n <= {max_n}"


def check_invert_counts(max_n: int) -> str:
    for scheme in ColorScheme:
        counts = list(invert_transform(scheme_color_counts(scheme, max_n)))
        prefix = PUBLISHED_PREFIXES.get(scheme, ())[:max_n]
        expect(tuple(counts[: len(prefix)]) == prefix, f"{scheme.value}: INVERT prefix {counts[:len(prefix)]}, published {prefix}")
        expect(
            linear_recurrence_check(counts, RECURRENCES[scheme]),
            f"{scheme.value}: counts break a(n) = {RECURRENCES[scheme][0]}a(n-1) + {RECURRENCES[scheme][1]}a(n-2)",
        )
    return f"INVERT counts satisfy the scheme recurrences, N <= {max_n}"


def check_rational_identity(max_n: int) -> str:
    indecomposable = rational_coeffs((0, 1, -1), (1, -2), max_n)
    total = rational_coeffs((0, 1, -1), (1, -3, 1), max_n)
    expect(invert_transform(indecomposable) == total, "INVERT of (x - x^2)/(1 - 2x) is not (x - x^2)/(1 - 3x + x^2)")
    expect(list(total) == [fibonacci(2 * n - 1) for n in range(1, max_n + 1)], "coefficients are not F(2n-1)")
    expect(list(total) == ncn_counts(max_n), "ncn_counts disagrees with the rational function")
    return f"rational identity holds coefficientwise, N <= {max_n}"


def _secondary(scheme: ColorScheme, *tilings) -> ColoredComposition:
    return ColoredComposition.of(scheme, [SecondaryTiling(Composition(t)) for t in tilings])


def _decorated(*parts) -> ColoredComposition:
    tn = TotallyNestedPartition.parse
    return ColoredComposition.of(ColorScheme.FIB_ODD, [DecoratedTiles(tuple(tn(c) for c in part)) for part in parts])


def worked_examples():
    """(name, thunk, expected) for every hand-checkable example."""
    plus1_example = _secondary(ColorScheme.FIB_PLUS1, (2,), (1, 1, 2), (1,), (2, 1))
    fib_example = _secondary(ColorScheme.FIB, (1, 3), (1, 1), (3, 1, 1), (1,))
    minus1 = _secondary(ColorScheme.FIB_MINUS1, (2, 2, 2), (2,), (3, 2), (2, 2))
    spotted = ColoredComposition.of(
        ColorScheme.FIB_EVEN,
        [
            SpottedTiling(((1, 1), (1, 1))),
            SpottedTiling(((1, 1),)),
            SpottedTiling(((4, 2), (1, 1))),
            SpottedTiling(((2, 1),)),
        ],
    )
    spotted_tree = LadderSpanningTree(
        10,
        frozenset(ladder_edges(10))
        - {bottom(2), bottom(3), bottom(8), top(1), top(7), vert(4), vert(6), vert(7), vert(10)},
    )
    chain = TotallyNestedPartition.parse("189|237|46|5")
    u = lambda *values: UnimodalSeq(values)
    panels = {
        "1_1 1_1 1_1", "1_1 1_1 1_2", "1_1 1_2 1_1", "1_1 1_2 1_2",
        "1_1 2_1", "1_1 2_2", "2_1 1_1", "2_1 1_2",
    }
    return [
        ("alpha", lambda: alpha(Composition((1, 1, 2, 1, 2, 2, 1))), Composition((1, 1, 3, 5, 1))),
        ("beta", lambda: beta(Composition((1, 1, 3, 5, 1))), Composition((4, 3, 2, 3))),
        ("fib-plus1 board", lambda: to_board(plus1_example), Board.make(10, solid=(2, 6, 7), dotted=(3, 4, 9))),
        ("fib-plus1 word", lambda: colored_to_word(plus1_example), Word.parse("021102201")),
        ("fib word", lambda: colored_to_word(fib_example), Word.parse("10021200112")),
        ("fib-even board", lambda: to_board(spotted), Board.make(10, solid=(2, 3, 8), dotted=(1, 7), spots=(1, 2, 3, 5, 8, 9))),
        ("fib-even word", lambda: colored_to_word(spotted), Word.parse("233100230", 4)),
        ("fib-even tree", lambda: colored_to_tree(spotted), spotted_tree),
        ("composition map", lambda: jacobsthal_comp_a(minus1), Composition((2, 2, 5, 2, 4, 1))),
        (
            "composition map inverse",
            lambda: jacobsthal_comp_a_inv(Composition((4, 2, 3, 1, 1, 5))),
            _secondary(ColorScheme.FIB_MINUS1, (2,), (2, 2, 2), (5,), (2,), (2,)),
        ),
        ("paired-run word", lambda: jacobsthal_word_c(minus1), Word.parse("111122220112211")),
        ("phi 14|2|3", lambda: phi(SetPartition.parse("14|2|3")), TotallyNestedPartition.parse("14|23")),
        ("phi 135|2|4", lambda: phi(SetPartition.parse("135|2|4")), TotallyNestedPartition.parse("15|24|3")),
        (
            "phi n=11",
            lambda: phi(SetPartition.of([(1, 4, 6, 8, 10, 11), (2,), (3,), (5,), (7,), (9,)])),
            TotallyNestedPartition.of([(1, 10, 11), (2, 3, 9), (4, 8), (5, 7), (6,)]),
        ),
        ("psi", lambda: psi(chain), u(1, 2, 2, 3, 4, 3, 2, 1, 1)),
        ("left insert", lambda: oplus(u(1, 1), u(1, 2, 1), Side.LEFT), u(2, 3, 2, 1, 1)),
        ("right insert", lambda: oplus(u(1, 1), u(1, 2, 1), Side.RIGHT), u(1, 1, 2, 3, 2)),
        ("left insert at peak", lambda: oplus(u(1, 2, 1), u(1, 1), Side.LEFT), u(1, 3, 3, 2, 1)),
        ("right insert at peak", lambda: oplus(u(1, 2, 1), u(1, 1), Side.RIGHT), u(1, 2, 3, 3, 1)),
        ("xi", lambda: xi(chain), CommaSlashString.parse("1,2/3,45/6,7/89")),
        (
            "unimodal",
            lambda: colored_to_unimodal(_decorated(("12",), ("1", "145|23", "12"))),
            u(1, 1, 3, 5, 5, 4, 4, 3, 3, 2),
        ),
        (
            "ocps",
            lambda: colored_to_ocps(_decorated(("12",), ("1", "145|23", "1"))),
            Ocps.of([(5, 6), (7,), (3, 4), (2, 8, 9), (1,)]),
        ),
        (
            "ocps string",
            lambda: ocps_encode(Ocps.of([(5, 6), (7,), (3, 4), (2, 8, 9), (1,)])),
            CommaSlashString.parse("12,/3,45/,6/78,9/"),
        ),
        (
            "2-composition panels",
            lambda: {str(colored_to_2comp(cc, RestrictedFamily.ONE_TWO)) for cc in enumerate_colored(ColorScheme.FIB_PLUS1, 3)},
            panels,
        ),
    ]


def check_worked_examples(max_n: int) -> str:
    examples = worked_examples()
    for name, thunk, expected in examples:
        got = thunk()
        expect(got == expected, f"{name}: got {got}, expected {expected}")
    return f"{len(examples)} worked examples reproduced"


SUITES = [
    Suite("count-tables", "colored enumeration against INVERT counts and published prefixes", 10, check_count_tables),
    Suite("board-roundtrip", "every colored composition reads back from its board", 10, check_board_roundtrip),
    Suite("restricted-families", "Fibonacci sizes of the three restricted families", 16, check_restricted_families),
    Suite("alpha-beta", "line-bundling bijections between restricted families", 14, check_alpha_beta),
    Suite("word-codecs", "ternary word codecs of the secondary-tiling schemes", 12, check_word_codecs),
    Suite("spot-words", "quaternary word codec of spotted tilings", 10, check_spot_words),
    Suite("jacobsthal", "four Jacobsthal-counted families", 12, check_jacobsthal, min_n=2),
    Suite("ladder-trees", "spotted tilings against brute-force ladder trees", 6, check_ladder_trees),
    Suite("tree-outputs", "every ladder image is a spanning tree", 8, check_tree_outputs),
    Suite("matrix-tree", "Laplacian cofactor counts of ladder trees", 30, check_matrix_tree),
    Suite("phi", "noncrossing nonnesting partitions to totally nested ones", 9, check_phi),
    Suite("ncn-lemma", "doubling of indecomposable noncrossing nonnesting counts", 12, check_ncn_lemma, min_n=3),
    Suite("psi", "totally nested partitions to unit-step unimodal sequences", 10, check_psi),
    Suite("unimodal", "fib-odd compositions to unimodal sequences", 9, check_unimodal),
    Suite("oplus", "associativity of peak insertion on tn-sequences", 9, check_oplus_associativity, min_n=3),
    Suite("xi", "totally nested partitions to restricted comma-slash strings", 9, check_xi),
    Suite("ocps", "fib-odd compositions to order-consecutive partition sequences", 8, check_ocps),
    Suite("two-comp", "secondary tilings to restricted 2-compositions", 10, check_two_comp),
    Suite("invert-counts", "INVERT counts against recurrences", 40, check_invert_counts),
    Suite("rational-identity", "INVERT of the indecomposable generating function", 50, check_rational_identity),
    Suite("worked-examples", "hand-checkable examples", 1, check_worked_examples),
]

SUITE_MAP = {suite.name: suite for suite in SUITES}
