#!/usr/bin/env python
import argparse
import logging
import sys
from importlib import metadata

from fibtile.cli import count, enumeration, mapping, render, series, verify


def _version():
    try:
        return metadata.version("fibtile")
    except metadata.PackageNotFoundError:
        return "unknown"


def main(argv=None):
    logging.basicConfig(level=logging.INFO)

    parser = argparse.ArgumentParser(
        description="Fibonacci-colored compositions and their bijections",
        formatter_class=lambda prog: argparse.HelpFormatter(prog, width=124),
    )

    parser.add_argument(
        "--version",
        action="version",
        version="fibtile %s" % _version(),
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at debug level")

    subparsers = parser.add_subparsers(title="Commands")

    count.add_commands(subparsers)
    enumeration.add_commands(subparsers)
    mapping.add_commands(subparsers)
    verify.add_commands(subparsers)
    render.add_commands(subparsers)
    series.add_commands(subparsers)

    args = parser.parse_args(argv)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    if not hasattr(args, "func"):
        parser.print_help()
        return 0

    try:
        status = args.func(args)
    except (ValueError, OSError) as e:
        logging.getLogger("fibtile").error(f"{e}")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
