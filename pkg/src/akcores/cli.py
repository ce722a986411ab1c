# ABOUTME: CLI commands for akcores: block weight, core, Uglov map and its inverse, core test,
# ABOUTME: and block decomposition tables, with JSON on stdout and diagnostics on stderr.

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from akcores.blocks import core_by_ops, decompose_blocks
from akcores.exceptions import DomainError, ParseError
from akcores.partitions import (
    Multicharge,
    Multipartition,
    multipartition_to_data,
    parse_multipartition,
    parse_partition,
)
from akcores.tables import TableFormat, block_rows, render_table
from akcores.uglov import is_core, is_reduced_core, tau, tau_inverse
from akcores.weights import block_weight

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_OUTPUT = 4

FORMAT_ENV = "AKCORES_FORMAT"


def get_default_format() -> TableFormat:
    """Return the table format from AKCORES_FORMAT, json when unset."""
    raw = os.environ.get(FORMAT_ENV, TableFormat.JSON.value)
    try:
        return TableFormat(raw.strip().lower())
    except ValueError as e:
        msg = f"{FORMAT_ENV}={raw!r} is not one of json, csv, md"
        raise ParseError(msg) from e


def parse_charge(text: str) -> Multicharge:
    """Read a comma-separated list of integers such as "0,1,3" or "-1,2"."""
    try:
        return tuple(int(item) for item in text.split(","))
    except ValueError as e:
        msg = f"Invalid multicharge {text!r}: expected comma-separated integers"
        raise ParseError(msg) from e


def _mp_and_charge(args: argparse.Namespace) -> tuple[Multipartition, Multicharge]:
    mp = parse_multipartition(args.mp)
    s = args.charge if args.charge is not None else (0,) * mp.level
    return mp, s


def _dump(data: object) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def weight_command(args: argparse.Namespace) -> str:
    """Print the block weight of a multipartition."""
    mp, s = _mp_and_charge(args)
    return _dump({"weight": block_weight(mp, s, args.e)})


def core_command(args: argparse.Namespace) -> str:
    """Print the core, its multicharge, the weight and the normalizing permutation."""
    mp, s = _mp_and_charge(args)
    core = core_by_ops(mp, s, args.e)
    return _dump(
        {
            "core": multipartition_to_data(core.core),
            "charge": list(core.charge),
            "weight": core.weight,
            "sigma": list(core.sigma),
        }
    )


def tau_command(args: argparse.Namespace) -> str:
    """Print the Uglov image of a multipartition and its charge."""
    mp, s = _mp_and_charge(args)
    image, charge = tau(mp, s, args.e)
    return _dump({"partition": list(image.parts), "charge": charge})


def tau_inverse_command(args: argparse.Namespace) -> str:
    """Print the multipartition and multicharge whose Uglov image is the given charged partition."""
    p = parse_partition(args.p)
    mp, s = tau_inverse(p, args.charge_total, args.level, args.e)
    return _dump({"multipartition": multipartition_to_data(mp), "charge": list(s)})


def is_core_command(args: argparse.Namespace) -> str:
    """Print whether a multipartition is an (e,s)-core and a reduced (e,s)-core."""
    mp, s = _mp_and_charge(args)
    return _dump({"is_core": is_core(mp, s, args.e), "is_reduced_core": is_reduced_core(mp, s, args.e)})


def blocks_command(args: argparse.Namespace) -> str:
    """Render the block decomposition table of all l-partitions of n."""
    fmt = TableFormat(args.format) if args.format else get_default_format()
    s = args.charge if args.charge is not None else (0,) * args.level
    blocks = decompose_blocks(args.n, args.level, args.e, s, workers=args.workers)
    return render_table(block_rows(blocks), fmt)


COMMANDS = {
    "weight": weight_command,
    "core": core_command,
    "tau": tau_command,
    "tau-inverse": tau_inverse_command,
    "is-core": is_core_command,
    "blocks": blocks_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="akcores - cores and blocks of multipartitions")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, default=2, help="The modulus e >= 2 (default: 2)")
    common.add_argument(
        "--charge", type=parse_charge, help="Multicharge as comma-separated integers; use --charge=-1,2 for negatives"
    )
    common.add_argument("--out", type=str, help="Write output to this file instead of stdout")

    for name, help_text in (
        ("weight", "Block weight of a multipartition"),
        ("core", "Core of a multipartition"),
        ("tau", "Uglov map of a multipartition"),
        ("is-core", "Test whether a multipartition is an (e,s)-core"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--mp", type=str, required=True, help='Multipartition as JSON, e.g. "[[3],[1]]"')

    inverse_parser = subparsers.add_parser("tau-inverse", parents=[common], help="Inverse of the Uglov map")
    inverse_parser.add_argument("--p", type=str, required=True, help='Partition as JSON, e.g. "[2,2]"')
    inverse_parser.add_argument("--charge-total", type=int, required=True, help="Charge of the partition's abacus")
    inverse_parser.add_argument("--l", dest="level", type=int, required=True, help="Number of components")

    blocks_parser = subparsers.add_parser("blocks", parents=[common], help="Block decomposition table")
    blocks_parser.add_argument("--n", type=int, required=True, help="Rank of the multipartitions")
    blocks_parser.add_argument("--l", dest="level", type=int, required=True, help="Number of components")
    blocks_parser.add_argument("--format", choices=[f.value for f in TableFormat], help=f"Table format ({FORMAT_ENV})")
    blocks_parser.add_argument("--workers", type=int, help="Compute cores in this many processes")

    return parser


def run(args: argparse.Namespace) -> int:
    """Execute a parsed command and return its exit code."""
    try:
        output = COMMANDS[args.command](args)
    except ParseError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    if args.out:
        try:
            Path(args.out).write_text(output + "\n")
        except OSError as e:
            print(f"Error: Failed to write {args.out}: {e}", file=sys.stderr)
            return EXIT_OUTPUT
    else:
        print(output)
    return EXIT_OK


def main(argv: list[str] | None = None) -> None:
    """Main entry point for akcores CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    if args.command is None:
        parser.print_help()
        sys.exit(EXIT_PARSE)

    sys.exit(run(args))
