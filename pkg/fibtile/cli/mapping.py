import logging
from dataclasses import dataclass
from typing import Callable, Optional

from fibtile.cli.inputs import FAMILY_CHOICES, add_input_arguments, family_arg, read_input
from fibtile.combinat.colorings import ColorScheme
from fibtile.combinat.core import alpha, alpha_inv, beta, beta_inv
from fibtile.combinat.ladder import colored_to_tree, tree_to_colored
from fibtile.combinat.multicomp import colored_from_2comp, colored_to_2comp
from fibtile.combinat.ocps import colored_from_ocps, colored_to_ocps, ocps_decode, ocps_encode, xi, xi_inv
from fibtile.combinat.partitions import phi, phi_inv
from fibtile.combinat.unimodal import colored_to_unimodal, psi, psi_inv, unimodal_to_colored
from fibtile.combinat.words import (
    colored_to_word,
    jacobsthal_comp_a,
    jacobsthal_comp_a_inv,
    jacobsthal_comp_b,
    jacobsthal_comp_b_inv,
    jacobsthal_word_c,
    jacobsthal_word_c_inv,
    jacobsthal_word_d,
    jacobsthal_word_d_inv,
    word_to_colored,
)
from fibtile.utils.codec import decode, encode, encode_text


@dataclass(frozen=True)
class Bijection:
    source: str
    target: str
    forward: Callable
    inverse: Callable
    scheme: Optional[ColorScheme] = None

    def apply(self, value, inverse: bool = False):
        if not inverse and self.scheme is not None and value.scheme != self.scheme:
            raise ValueError(f"expected a {self.scheme.value} colored composition, got {value.scheme.value}")
        return (self.inverse if inverse else self.forward)(value)


def _word_codec(scheme: ColorScheme, alphabet: str) -> Bijection:
    return Bijection("colored", alphabet, colored_to_word, lambda w: word_to_colored(w, scheme), scheme)


BIJECTIONS = {
    "alpha": Bijection("composition", "composition", alpha, alpha_inv),
    "beta": Bijection("composition", "composition", beta, beta_inv),
    "thm31-word": _word_codec(ColorScheme.FIB_PLUS1, "word"),
    "thm32-word": _word_codec(ColorScheme.FIB, "word"),
    "spot-word": _word_codec(ColorScheme.FIB_EVEN, "word4"),
    "thm33a": Bijection("colored", "composition", jacobsthal_comp_a, jacobsthal_comp_a_inv, ColorScheme.FIB_MINUS1),
    "thm33b": Bijection("composition", "composition", jacobsthal_comp_b, jacobsthal_comp_b_inv),
    "thm33c": Bijection("colored", "word", jacobsthal_word_c, jacobsthal_word_c_inv, ColorScheme.FIB_MINUS1),
    "thm33d": Bijection("colored", "word", jacobsthal_word_d, jacobsthal_word_d_inv, ColorScheme.FIB_MINUS1),
    "ladder-tree": Bijection("colored", "tree", colored_to_tree, tree_to_colored, ColorScheme.FIB_EVEN),
    "phi": Bijection("partition", "tn-partition", phi, phi_inv),
    "psi": Bijection("tn-partition", "unimodal", psi, psi_inv),
    "unimodal": Bijection("colored", "unimodal", colored_to_unimodal, unimodal_to_colored, ColorScheme.FIB_ODD),
    "xi": Bijection("tn-partition", "comma-slash", xi, xi_inv),
    "ocps": Bijection("colored", "ocps", colored_to_ocps, colored_from_ocps, ColorScheme.FIB_ODD),
    "ocps-string": Bijection("ocps", "comma-slash", ocps_encode, ocps_decode),
}

# needs the restricted family on both sides, so it is dispatched separately
TWO_COMP = "two-comp"


def add_commands(subparsers):
    a = subparsers.add_parser("map", help="Apply a bijection, or its inverse, to one object")
    a.add_argument("--bijection", type=str, required=True, choices=sorted(list(BIJECTIONS) + [TWO_COMP]))
    a.add_argument("--inverse", action="store_true", help="Map from the target family back to the source")
    a.add_argument("--family", type=str, choices=FAMILY_CHOICES, default=None, help="Restricted family for two-comp")
    a.add_argument("--format", type=str, choices=["json", "text"], default="json", help="text prints the compact form where there is one")
    add_input_arguments(a)
    a.set_defaults(func=map_object)


def map_object(args):
    text = read_input(args)
    if args.bijection == TWO_COMP:
        image = _two_comp(text, family_arg(args), args.inverse)
    else:
        bijection = BIJECTIONS[args.bijection]
        value = decode(bijection.target if args.inverse else bijection.source, text)
        image = bijection.apply(value, args.inverse)
    logging.getLogger("map").debug(f"{args.bijection}{' inverse' if args.inverse else ''}: {text.strip()} -> {image}")
    print(encode_text(image) if args.format == "text" else encode(image))
    return 0


def _two_comp(text: str, family, inverse: bool):
    if inverse:
        if family is None:
            raise ValueError("--inverse two-comp needs --family")
        return colored_from_2comp(decode("two-comp", text, family))
    cc = decode("colored", text)
    family = family or cc.scheme.family
    if family is None:
        raise ValueError(f"{cc.scheme.value} colored compositions have no 2-composition codec")
    return colored_to_2comp(cc, family)
