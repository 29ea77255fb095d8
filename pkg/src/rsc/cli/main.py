"""Main CLI entry point for rsc."""

import argparse
import sys
from pathlib import Path

from ..exceptions import RSCError
from .commands.compute import cmd_delta, cmd_mainterm, cmd_meansquare, cmd_sieve, cmd_tconst
from .commands.count import cmd_count
from .commands.pipeline import cmd_pipeline
from .utils import setup_logging

COMMANDS = {
    "count": cmd_count,
    "sieve": cmd_sieve,
    "tconst": cmd_tconst,
    "mainterm": cmd_mainterm,
    "delta": cmd_delta,
    "meansquare": cmd_meansquare,
    "verify": cmd_pipeline,
}


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every command. Unset flags fall back to RSC_* and --config."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--x-max", dest="x_max", type=int, help="Largest x (default: 10^6)")
    common.add_argument(
        "--precision-digits", dest="precision_digits", type=int, help="Working decimal digits (default: 60)"
    )
    common.add_argument(
        "--prime-cutoff", dest="prime_cutoff", type=int, help="Prime cutoff P of the direct product (default: 10^6)"
    )
    common.add_argument(
        "--truncation", dest="truncation_E", type=int, help="Local-factor truncation degree E (default: 16)"
    )
    common.add_argument("--threads", type=int, help="Sieve worker processes (default: 1)")
    common.add_argument("--block-size", dest="block_size", type=int, help="Sieve block length (default: 2^22)")
    common.add_argument("--format", choices=["json", "csv"], help="Output format (default: json)")
    common.add_argument("--output", "-o", dest="output_path", type=Path, help="Output file (default: stdout)")
    common.add_argument(
        "--checkpoints", dest="checkpoints_path", type=Path, help="Binary file for the sieve checkpoints (x, D(x))"
    )
    common.add_argument("--verify", action="store_true", help="Run the oracle checks for this command")
    common.add_argument("--config", type=Path, help="YAML run configuration")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsc",
        description="rsc - cyclic subgroups of Z_l x Z_m x Z_n and their summatory function",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  rsc count --cyclic 2 2 2 --verify         # c(2, 2, 2) with the element-order oracle
  rsc count --subgroups 4 2                 # s(4, 2)
  rsc sieve --x-max 5000 --format csv -o f.csv
  rsc tconst --verify                       # T(1+u) coefficients, cross-checked
  rsc mainterm --precision-digits 80        # A_0 .. A_9
  rsc delta --x-max 1000000 --verify        # delta(x) samples and octave maxima
  rsc meansquare --x-max 8388608            # M(T) and its exponent
  rsc verify --x-max 10000                  # full pipeline with every gate
        """,
    )
    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    count_parser = subparsers.add_parser("count", parents=[common], help="Count subgroups of one group")
    count_parser.add_argument("--cyclic", nargs="+", type=int, metavar="N", help="Cyclic subgroups of Z_n1 x .. (1-3 n)")
    count_parser.add_argument("--subgroups", nargs="+", type=int, metavar="N", help="All subgroups of Z_m x Z_n")

    subparsers.add_parser("sieve", parents=[common], help="f(k) and D(k) up to x_max")
    subparsers.add_parser("tconst", parents=[common], help="Taylor coefficients of T at s = 1")
    subparsers.add_parser("mainterm", parents=[common], help="Main-term polynomial coefficients")
    subparsers.add_parser("delta", parents=[common], help="Error term samples and octave maxima")
    subparsers.add_parser("meansquare", parents=[common], help="Mean square of the error term")
    subparsers.add_parser("verify", parents=[common], help="Full pipeline with acceptance gates")
    return parser


def main(argv=None):
    """Main CLI entry point for rsc."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        sys.exit(2)

    setup_logging(args.verbose)

    try:
        COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print("\n⚠️  Operation cancelled by user")
        sys.exit(1)
    except RSCError as e:
        print(f"❌ [{e.module}] {e.detail}", file=sys.stderr)
        sys.exit(e.exit_code)
    except Exception as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
