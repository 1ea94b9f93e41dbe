from fibtile.cli.inputs import add_input_arguments, read_input
from fibtile.utils.codec import decode
from fibtile.utils.render import FORMATS, render

RENDER_KINDS = ["board", "colored", "partition", "tn-partition", "tree"]


def add_commands(subparsers):
    a = subparsers.add_parser("render", help="Draw a board, colored composition, arc diagram or ladder tree")
    a.add_argument("--kind", type=str, choices=RENDER_KINDS, default="colored")
    a.add_argument("--format", type=str, choices=FORMATS, default="ascii")
    add_input_arguments(a)
    a.set_defaults(func=render_object)


def render_object(args):
    value = decode(args.kind, read_input(args))
    print(render(value, args.format))
    return 0
