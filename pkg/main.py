#!/usr/bin/env python3
import argparse
import logging
import sys

from pathlib import Path
from typing import List, Optional, Tuple

import report
import richardson

from common import parse_index_list
from richardson.core import BOTH, METHODS, PATHS, MultiplicityReport
from richardson.indices import MODES, ORDINARY, SYMPLECTIC


logger = logging.getLogger("richardson")


# exit codes; non-membership of the fixed point is a valid answer and exits 0
EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3
EXIT_THEOREM_VIOLATION = 4


class HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("width", 79)

        super().__init__(*args, **kwargs)


def parse_args(argv: List[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        formatter_class=HelpFormatter,
        description="Multiplicity of a Richardson variety X_alpha^gamma at the "
        "torus fixed point e_beta, counted by lattice-path families and/or by "
        "maximal chain-bounded star sets.",
    )
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--alpha", type=parse_index_list, required=True)
    parser.add_argument("--beta", type=parse_index_list, required=True)
    parser.add_argument("--gamma", type=parse_index_list, required=True)
    parser.add_argument("--mode", choices=MODES, default=SYMPLECTIC)
    parser.add_argument(
        "--n", type=int, help="Ambient size; ordinary mode only (default 2d)"
    )
    parser.add_argument("--method", choices=METHODS, default=PATHS)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--list-families", action="store_true")
    parser.add_argument("--emit-svg", type=Path)
    parser.add_argument(
        "--svg-content", choices=report.svg.CONTENTS, default=report.svg.CHAINS
    )
    parser.add_argument("--export-xlsx", type=Path)
    parser.add_argument(
        "--orbit-budget", type=int, default=richardson.DEFAULT_ORBIT_BUDGET
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="Worker processes for the path-family search (threads where "
        "fork is unavailable)",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Include per-method timings; output is then no longer reproducible",
    )
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default="WARNING",
    )

    return parser.parse_args(argv)


def run(args: argparse.Namespace) -> Tuple[Optional[MultiplicityReport], int]:
    if args.n is not None and args.mode != ORDINARY:
        logger.error("--n is only valid in ordinary mode")
        return None, EXIT_BAD_INPUT

    try:
        alpha, beta, gamma = (
            richardson.validate_tuple(values, args.d, mode=args.mode, ambient=args.n)
            for values in (args.alpha, args.beta, args.gamma)
        )

        result = richardson.build_report(
            alpha,
            beta,
            gamma,
            method=args.method,
            list_families=args.list_families,
            orbit_budget=args.orbit_budget,
            jobs=args.jobs,
            timings=args.timings,
        )
    except richardson.IndexTupleError as error:
        logger.error("invalid input: %s: %s", type(error).__name__, error)
        return None, EXIT_BAD_INPUT
    except richardson.BudgetExceededError as error:
        logger.error("%s; raise --orbit-budget or use --method %s", error, PATHS)
        return None, EXIT_BUDGET
    except richardson.TheoremViolationError as error:
        logger.error("internal error: %s", error)
        return None, EXIT_THEOREM_VIOLATION

    if args.method == BOTH:
        logger.info("both methods agree on multiplicity %i", result["multiplicity"])

    return result, EXIT_OK


def main(argv: List[str]) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=args.log_level, format="%(levelname)s %(name)s: %(message)s"
    )

    result, returncode = run(args)
    if result is None:
        return returncode

    if args.emit_svg:
        try:
            document = report.render_svg(result, args.svg_content)
            args.emit_svg.write_text(document, encoding="utf-8")
        except (report.RenderError, OSError) as error:
            logger.error("cannot write %s: %s", args.emit_svg, error)
            return EXIT_BAD_INPUT

    if args.export_xlsx:
        try:
            report.export_xlsx(result, str(args.export_xlsx))
        except OSError as error:
            logger.error("cannot write %s: %s", args.export_xlsx, error)
            return EXIT_BAD_INPUT

    if args.format == "json":
        sys.stdout.write(report.report_to_json(result))
    else:
        sys.stdout.write(report.render_text(result))

    return returncode


def _entry_point() -> int:
    return main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(_entry_point())
