import sys
from pathlib import Path

from fibtile.combinat.core import RestrictedFamily


def add_input_arguments(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--input", type=str, default=None, help="Object as JSON or compact text")
    group.add_argument("--input-file", type=str, default=None, help="File holding the object; stdin if neither is given")


def read_input(args) -> str:
    if args.input is not None:
        return args.input
    if args.input_file is not None:
        return Path(args.input_file).read_text()
    return sys.stdin.read()


def family_arg(args):
    return RestrictedFamily(args.family) if getattr(args, "family", None) else None


FAMILY_CHOICES = [f.value for f in RestrictedFamily]
