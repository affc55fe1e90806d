"""
The `structura` command line.

    structura validate FILE STRUCTURE
    structura transport FILE STRUCTURE [--adjunction beta|discrete|identity]
        [--direction ascend|descend] [--verify-unique]
    structura theory FILE THEORY [--hom M N] [--max-size L]
        [--allow-bounded-oracle]
    structura enumerate FILE THEORY --on CARRIER

In `eq` statements every name that is not an operation is a variable,
numbered in order of first occurrence with the left side read first.

Exit codes: 0 success, 1 mathematical failure, 2 usage or document
error. Reports go to stdout, logs to stderr.
"""

# Import the config module first so the FLASK_* prefix is stripped from
# env vars before they are parsed
import structura.config  # noqa: F401

import argparse
import json
import logging
import sys

import sentry_sdk

from structura import commands
from structura.config import SENTRY_CONFIG, SENTRY_DSN
from structura.fincat.adjunction import ADJUNCTIONS

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="structura",
        description=(
            "Check algebraic structures on finite sets and spaces, and "
            "transport them along adjunctions."
        ),
        epilog=(
            "Variables in eq statements are numbered by first "
            "occurrence, left side first."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="structura document (UTF-8)")
    common.add_argument(
        "--json",
        action="store_true",
        help="print {command, status, counts, witnesses} as JSON",
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="log progress"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate = subparsers.add_parser(
        "validate", parents=[common], help="check a structure's identities"
    )
    validate.add_argument("structure")

    transport = subparsers.add_parser(
        "transport",
        parents=[common],
        help="ascend or descend a structure along an adjunction",
    )
    transport.add_argument("structure")
    transport.add_argument(
        "--adjunction", choices=sorted(ADJUNCTIONS), default="beta"
    )
    transport.add_argument(
        "--direction", choices=commands.DIRECTIONS, default="ascend"
    )
    transport.add_argument(
        "--verify-unique",
        action="store_true",
        help="compare against every competing structure",
    )

    theory = subparsers.add_parser(
        "theory", parents=[common], help="list a hom-set of a theory"
    )
    theory.add_argument("theory")
    theory.add_argument(
        "--hom",
        nargs=2,
        type=int,
        metavar=("M", "N"),
        default=(1, 1),
        help="list T(M, N)",
    )
    theory.add_argument("--max-size", type=int, default=3)
    theory.add_argument(
        "--allow-bounded-oracle",
        action="store_true",
        help="accept finite-model equality when no shipped oracle fits",
    )

    enumerate_ = subparsers.add_parser(
        "enumerate",
        parents=[common],
        help="list every structure of a theory on a carrier",
    )
    enumerate_.add_argument("theory")
    enumerate_.add_argument("--on", dest="carrier", required=True)
    return parser


def options_for(args):
    """Keyword arguments of the command named by `args.command`."""
    if args.command == "validate":
        return {"structure_name": args.structure}
    if args.command == "transport":
        return {
            "structure_name": args.structure,
            "adjunction": args.adjunction,
            "direction": args.direction,
            "verify_unique": args.verify_unique,
        }
    if args.command == "theory":
        return {
            "theory_name": args.theory,
            "hom": tuple(args.hom),
            "max_size": args.max_size,
            "allow_bounded": args.allow_bounded_oracle,
        }
    return {"theory_name": args.theory, "carrier_name": args.carrier}


def configure_logging(verbose):
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def emit(result, as_json, stream):
    if as_json:
        stream.write(json.dumps(result.to_dict(), indent=2) + "\n")
    else:
        stream.write(result.text + "\n")


def main(argv=None, stdout=None):
    if stdout is None:
        stdout = sys.stdout
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    if SENTRY_DSN:
        sentry_sdk.init(dsn=SENTRY_DSN, **SENTRY_CONFIG)

    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    except (OSError, UnicodeDecodeError) as error:
        sys.stderr.write(f"structura: cannot read {args.file}: {error}\n")
        return commands.EXIT_USAGE

    try:
        result = commands.run(args.command, text, **options_for(args))
    except Exception:
        sentry_sdk.capture_exception()
        raise

    emit(result, args.json, stdout)
    return result.exit_code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
