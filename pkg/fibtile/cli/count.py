import json
import logging

from fibtile.combinat.colorings import ColorScheme, count_colored
from fibtile.utils.bfile import first_mismatch, read_bfile

COUNT_DEFAULTS = {
    "max_n": 10,
    "format": "text",
}

SCHEME_CHOICES = [s.value for s in ColorScheme]


def add_commands(subparsers):
    a = subparsers.add_parser("count", help="Count colored compositions per scheme and n")
    a.add_argument("--scheme", type=str, action="append", choices=SCHEME_CHOICES, help="Color scheme, repeatable; all schemes by default")
    a.add_argument("--n", type=int, default=None, help="Count for this n only")
    a.add_argument("--max-n", type=int, default=COUNT_DEFAULTS["max_n"], help="Tabulate n = 1..max-n")
    a.add_argument("--format", type=str, choices=["text", "json"], default=COUNT_DEFAULTS["format"])
    a.add_argument("--oeis-bfile", type=str, default=None, help="Compare the counts of a single scheme with a local b-file")
    a.set_defaults(func=count)


def count(args):
    logger = logging.getLogger("count")
    schemes = [ColorScheme(s) for s in args.scheme] if args.scheme else list(ColorScheme)
    if args.n is not None:
        if args.n < 1:
            raise ValueError(f"n must be positive, got {args.n}")
        ns = [args.n]
    else:
        if args.max_n < 1:
            raise ValueError(f"max-n must be positive, got {args.max_n}")
        ns = list(range(1, args.max_n + 1))

    table = {scheme: [count_colored(scheme, n) for n in ns] for scheme in schemes}

    if args.format == "json":
        print(json.dumps({"n": ns, "counts": {s.value: values for s, values in table.items()}}))
    elif len(schemes) == 1 and len(ns) == 1:
        print(table[schemes[0]][0])
    else:
        print(format_table(ns, table))

    if args.oeis_bfile is None:
        return 0
    if len(schemes) != 1:
        raise ValueError("--oeis-bfile compares exactly one --scheme")
    terms = read_bfile(args.oeis_bfile)
    mismatch = first_mismatch(table[schemes[0]], terms, offset=ns[0])
    if mismatch is not None:
        n, computed, expected = mismatch
        logger.error(f"{schemes[0].value} differs from {args.oeis_bfile} at n={n}: computed {computed}, b-file {expected}")
        return 1
    logger.info(f"{schemes[0].value} matches {args.oeis_bfile} for n={ns[0]}..{ns[-1]}")
    return 0


def format_table(ns, table) -> str:
    widths = [max(len(str(n)), *(len(str(values[i])) for values in table.values())) for i, n in enumerate(ns)]
    label = max(len("scheme"), *(len(s.value) for s in table))
    lines = ["scheme".ljust(label) + "  " + "  ".join(str(n).rjust(w) for n, w in zip(ns, widths))]
    for scheme, values in table.items():
        lines.append(scheme.value.ljust(label) + "  " + "  ".join(str(v).rjust(w) for v, w in zip(values, widths)))
    return "\n".join(lines)
