from __future__ import annotations

import argparse
import datetime
import logging
import sys
import time
from pathlib import Path

import humanize

from knotperm.exceptions import InternalInconsistency, KnotpermError
from knotperm.permutation import parse_permutation
from knotperm.preferences import Preferences, default_preferences_path, load_preferences
from knotperm.trees import parse_tree

logger = logging.getLogger(__name__)

COUNT_TARGETS = ("unknotted-cycles", "unlinked", "unlinked-with-fixed")


def n_range_argument_type(s: str) -> range:
    """`7` or `2..9`, both ends included."""
    low, sep, high = s.partition("..")
    try:
        first = int(low)
        last = int(high) if sep else first
    except ValueError:
        raise ValueError(f"Expected N or A..B, got {s}") from None
    if first < 1 or last < first:
        raise ValueError(f"Empty or non-positive range {s}")
    return range(first, last + 1)


def positive_int(s: str) -> int:
    value = int(s)
    if value < 1:
        raise ValueError(f"Expected a positive integer, got {s}")
    return value


def add_enumeration_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=positive_int,
        help="Worker processes for enumeration. Overrides KNOTPERM_THREADS and the preferences file.",
    )
    parser.add_argument(
        "--max-n",
        type=positive_int,
        help="Raise or lower every enumeration cap. Overrides KNOTPERM_MAX_N and the preferences file.",
    )
    parser.add_argument("--progress", action="store_true", help="Show a progress bar over enumeration chunks.")


def add_json_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print machine-readable JSON.")


def effective_preferences(args: argparse.Namespace, include_environment: bool = True) -> Preferences:
    """Preferences file, then the environment unless left out, then the command line flags."""
    preferences = load_preferences(args.config, environ=None if include_environment else {})
    if getattr(args, "max_n", None) is not None:
        preferences.cycle_cap = preferences.derangement_cap = preferences.permutation_cap = args.max_n
    if getattr(args, "threads", None) is not None:
        preferences.threads = args.threads
    return preferences


def add_classify_parser(parser: argparse.ArgumentParser):
    parser.add_argument("permutation", type=parse_permutation, help="One-line permutation, e.g. 864275193.")
    parser.add_argument(
        "--count-fixed-points",
        action="store_true",
        help="Treat each fixed point as an unknotted component instead of rejecting the permutation.",
    )
    add_json_argument(parser)

    from knotperm.commands import run_classify

    parser.set_defaults(func=run_classify)


def add_tree_parser(parser: argparse.ArgumentParser):
    directions = parser.add_subparsers(dest="direction", required=True)

    to_cycle = directions.add_parser("to-cycle", help="Build the unknotted cycle of a signed tree")
    to_cycle.add_argument("tree", type=parse_tree, help='Tree text, e.g. "(+(+(. .) -(. .)) -(. .))".')
    to_cycle.add_argument("--trace", action="store_true", help="Print every intermediate cycle.")

    from_cycle = directions.add_parser("from-cycle", help="Find the canonical tree of an unknotted cycle")
    from_cycle.add_argument("cycle", type=parse_permutation, help="One-line cycle, e.g. 246315.")
    from_cycle.add_argument(
        "--left-normal",
        action="store_true",
        help="Print the left normal form instead of the lexicographically smallest tree.",
    )

    from knotperm.commands import run_tree_from_cycle, run_tree_to_cycle

    to_cycle.set_defaults(func=run_tree_to_cycle)
    from_cycle.set_defaults(func=run_tree_from_cycle)


def add_count_parser(parser: argparse.ArgumentParser):
    parser.add_argument("target", choices=COUNT_TARGETS, help="What to count.")
    parser.add_argument("n_range", type=n_range_argument_type, metavar="N|A..B", help="Lengths to count.")
    parser.add_argument("--by-components", action="store_true", help="Split unlink counts by component count.")
    parser.add_argument(
        "--check",
        action="store_true",
        help="Compare against the generating functions and the vendored sequences; exit 1 on mismatch.",
    )
    add_enumeration_arguments(parser)
    add_json_argument(parser)

    from knotperm.commands import run_count

    parser.set_defaults(func=run_count)


def add_render_parser(parser: argparse.ArgumentParser):
    parser.add_argument("permutation", type=parse_permutation, help="One-line permutation.")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--ascii", action="store_const", dest="format", const="ascii", help="Character art (default).")
    group.add_argument("--svg", action="store_const", dest="format", const="svg", help="An SVG document.")
    parser.set_defaults(format="ascii")
    parser.add_argument("--seifert", action="store_true", help="Overlay the Seifert circles (SVG only).")
    parser.add_argument("--no-diagonal", action="store_true", help="Leave out the diagonal.")
    parser.add_argument("--no-crossings", action="store_true", help="Draw crossings without over/under marks.")
    parser.add_argument("--cell-size", type=int, default=40, help="Pixels per lattice unit for SVG.")
    parser.add_argument("--out", type=Path, help="Write to this file instead of standard output.")

    from knotperm.commands import run_render

    parser.set_defaults(func=run_render)


def add_verify_parser(parser: argparse.ArgumentParser):
    parser.add_argument("size", type=positive_int, metavar="MAX_N", help="Largest size to check exhaustively.")
    add_enumeration_arguments(parser)
    add_json_argument(parser)

    from knotperm.commands import run_verify

    parser.set_defaults(func=run_verify)


def add_dg_parser(parser: argparse.ArgumentParser):
    parser.add_argument("n", type=positive_int, help="Permutation length.")
    add_enumeration_arguments(parser)
    add_json_argument(parser)

    from knotperm.commands import run_dg_experiment

    parser.set_defaults(func=run_dg_experiment)


def add_probability_parser(parser: argparse.ArgumentParser):
    parser.add_argument("n", type=positive_int, help="Cycle length, at least 2.")
    add_json_argument(parser)

    from knotperm.commands import run_prob_unknot

    parser.set_defaults(func=run_prob_unknot)


def add_config_parser(parser: argparse.ArgumentParser):
    parser.add_argument("action", choices=("show", "write"), help="Print or persist the effective preferences.")
    add_enumeration_arguments(parser)

    from knotperm.commands import run_config

    parser.set_defaults(func=run_config)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotperm")
    parser.add_argument("--verbose", action="store_true", help="Log debug output to standard error.")
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help=f"Preferences file to read. Defaults to {default_preferences_path()}.",
    )

    subparsers = parser.add_subparsers(dest="tool", required=True)
    add_classify_parser(subparsers.add_parser("classify", help="Decide unknot or unlink for a permutation"))
    add_tree_parser(subparsers.add_parser("tree", help="Convert between signed trees and unknotted cycles"))
    add_count_parser(subparsers.add_parser("count", help="Count unknotted cycles or unlinked permutations"))
    add_render_parser(subparsers.add_parser("render", help="Draw a cycle diagram"))
    add_verify_parser(subparsers.add_parser("verify", help="Run every property check up to a size"))
    add_dg_parser(subparsers.add_parser("dg-experiment", help="Compare Diaconis-Graham equality with unlinks"))
    add_probability_parser(subparsers.add_parser("prob-unknot", help="Exact chance a random n-cycle is unknotted"))
    add_config_parser(subparsers.add_parser("config", help="Show or write preferences"))

    return parser


def run_cli(argv: list[str]) -> int:
    args = create_parser().parse_args(argv[1:])
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    start = time.perf_counter()
    try:
        status = args.func(args)
    except InternalInconsistency as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return 1
    except KnotpermError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    elapsed = datetime.timedelta(seconds=time.perf_counter() - start)
    logger.info("%s finished in %s", args.tool, humanize.naturaldelta(elapsed, minimum_unit="milliseconds"))
    return status

