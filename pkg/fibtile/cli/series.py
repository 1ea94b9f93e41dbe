import json

from fibtile.combinat.colorings import ColorScheme, scheme_color_counts
from fibtile.combinat.series import invert_transform, parse_poly, rational_coeffs


def add_commands(subparsers):
    a = subparsers.add_parser("series", help="Expand a rational generating function or a scheme's INVERT transform")
    a.add_argument("--numer", type=str, default=None, help="Numerator coefficients, constant term first, e.g. 0,1,-1")
    a.add_argument("--denom", type=str, default=None, help="Denominator coefficients, e.g. 1,-3,1")
    a.add_argument("--scheme", type=str, choices=[s.value for s in ColorScheme], default=None)
    a.add_argument("--n", type=int, required=True, help="Number of coefficients, t^1..t^n")
    a.add_argument("--format", type=str, choices=["text", "json"], default="text")
    a.set_defaults(func=series)


def series(args):
    if args.scheme is not None:
        if args.numer is not None or args.denom is not None:
            raise ValueError("give either --scheme or --numer/--denom")
        coeffs = invert_transform(scheme_color_counts(ColorScheme(args.scheme), args.n))
    else:
        if args.numer is None or args.denom is None:
            raise ValueError("series needs --scheme or both --numer and --denom")
        coeffs = rational_coeffs(parse_poly(args.numer), parse_poly(args.denom), args.n)

    if args.format == "json":
        print(json.dumps(coeffs.to_json()))
    else:
        print(", ".join(str(c) for c in coeffs))
    return 0
