import json
import logging
import sys

from fibtile.cli.inputs import FAMILY_CHOICES, family_arg
from fibtile.combinat.colorings import ColorScheme, enumerate_colored
from fibtile.combinat.core import enumerate_compositions, enumerate_family
from fibtile.combinat.ladder import enumerate_trees
from fibtile.combinat.multicomp import enumerate_2comp
from fibtile.combinat.ocps import enumerate_comma_slash, enumerate_ocps
from fibtile.combinat.partitions import (
    enumerate_ncn,
    enumerate_ncn_indecomposable,
    enumerate_set_partitions,
    enumerate_totally_nested,
)
from fibtile.combinat.unimodal import enumerate_unimodal
from fibtile.combinat.words import WordConstraint, enumerate_words


def _colored(args):
    if not args.scheme:
        raise ValueError("--kind colored needs --scheme")
    return enumerate_colored(ColorScheme(args.scheme), args.n)


def _compositions(args):
    family = family_arg(args)
    return enumerate_compositions(args.n) if family is None else enumerate_family(family, args.n)


def _words(args):
    if not args.constraint:
        raise ValueError("--kind word needs --constraint")
    return enumerate_words(WordConstraint(args.constraint), args.n)


def _two_comps(args):
    family = family_arg(args)
    if family is None:
        raise ValueError("--kind two-comp needs --family")
    return enumerate_2comp(family, args.n)


ENUMERATORS = {
    "colored": _colored,
    "composition": _compositions,
    "word": _words,
    "tree": lambda args: enumerate_trees(args.n),
    "partition": lambda args: enumerate_set_partitions(args.n),
    "ncn": lambda args: enumerate_ncn(args.n),
    "ncn-indecomposable": lambda args: enumerate_ncn_indecomposable(args.n),
    "tn-partition": lambda args: enumerate_totally_nested(args.n),
    "unimodal": lambda args: enumerate_unimodal(args.n),
    "ocps": lambda args: enumerate_ocps(args.n),
    "comma-slash": lambda args: enumerate_comma_slash(args.n),
    "two-comp": _two_comps,
}


def add_commands(subparsers):
    a = subparsers.add_parser("enumerate", help="Stream all objects of one kind and size as newline-delimited JSON")
    a.add_argument("--kind", type=str, choices=sorted(ENUMERATORS), default="colored")
    a.add_argument("--n", type=int, required=True, help="Size (word length for --kind word)")
    a.add_argument("--scheme", type=str, choices=[s.value for s in ColorScheme], default=None)
    a.add_argument("--family", type=str, choices=FAMILY_CHOICES, default=None)
    a.add_argument("--constraint", type=str, choices=[c.value for c in WordConstraint], default=None)
    a.add_argument("--limit", type=int, default=None, help="Stop after this many objects")
    a.set_defaults(func=enumerate_objects)


def enumerate_objects(args):
    if args.n < 0 or (args.n == 0 and args.kind != "word"):
        raise ValueError(f"n must be positive, got {args.n}")
    emitted = 0
    for value in ENUMERATORS[args.kind](args):
        if args.limit is not None and emitted >= args.limit:
            break
        sys.stdout.write(json.dumps(value.to_json()) + "\n")
        emitted += 1
    logging.getLogger("enumerate").debug(f"emitted {emitted} {args.kind} objects of size {args.n}")
    return 0
