import json

from fibtile.verify.runner import VERIFY_DEFAULTS, VerifyRunner, format_report, load_config_from_file
from fibtile.verify.suites import SUITE_MAP, SUITES


def add_commands(subparsers):
    a = subparsers.add_parser("verify", help="Run the invariant suites against the brute-force oracles")
    a.add_argument("--max-n", type=int, default=VERIFY_DEFAULTS["max_n"], help="Cap every suite's size bound")
    a.add_argument("--config", type=str, default=VERIFY_DEFAULTS["config"], help="JSON file of per-suite max_n values")
    a.add_argument("--jobs", type=int, default=VERIFY_DEFAULTS["jobs"], help="Worker threads")
    a.add_argument("--suite", type=str, action="append", choices=sorted(SUITE_MAP), help="Run only this suite, repeatable")
    a.add_argument("--format", type=str, choices=["text", "json"], default="text")
    a.set_defaults(func=verify)


def verify(args):
    limits = load_config_from_file(args.config) if args.config else None
    suites = [SUITE_MAP[name] for name in args.suite] if args.suite else SUITES
    if args.max_n is not None and args.max_n < 0:
        raise ValueError(f"max-n must be nonnegative, got {args.max_n}")

    results = VerifyRunner(suites, limits=limits, max_n=args.max_n, jobs=args.jobs).run()

    if args.format == "json":
        print(json.dumps([r.to_json() for r in results]))
    else:
        print(format_report(results))
    return 0 if all(r.status.ok() for r in results) else 1
