"""Define the command line: one subcommand per verification suite."""
import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from . import const
from .dispatch import ProgressEvent
from .error import DomainError, NumericalFailureError, format_error_message
from .runner import SuiteRunner
from .suites import SEEDED_COMMANDS

_LOGGER = logging.getLogger(__name__)

COMMON_OPTIONS = ("command", "out", "seed", "threads", "verbose", "timestamps")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--out",
        default=const.DEFAULT_OUT_DIR,
        help="report directory (default: %(default)s)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=const.DEFAULT_SEED,
        help="seed for random polynomials (default: %(default)s)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=const.DEFAULT_THREADS,
        help="worker threads; never changes results (default: %(default)s)",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument(
        "--no-timestamps",
        dest="timestamps",
        action="store_false",
        help="omit timestamps so reruns are byte-identical",
    )
    return common


def _range(parser: argparse.ArgumentParser, pmin: int, pmax: int):
    parser.add_argument("--pmin", type=int, default=pmin, help="smallest prime")
    parser.add_argument("--pmax", type=int, default=pmax, help="largest prime")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog=const.__title__,
        description="Numerical verification suites for Fekete polynomials.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + const.__version__
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=help_text)

    gauss = add(const.COMMAND_GAUSS, "Gauss sums at the roots of unity")
    _range(gauss, const.DEFAULT_GAUSS_PMIN, const.DEFAULT_GAUSS_PMAX)

    zeros = add(const.COMMAND_ZEROS, "sign agreements and circle zeros of f_p")
    _range(zeros, const.DEFAULT_ZEROS_PMIN, const.DEFAULT_ZEROS_PMAX)
    zeros.add_argument("--refinement", type=int, default=const.DEFAULT_REFINEMENT)
    zeros.add_argument("--bisect-tol", type=float, default=const.DEFAULT_BISECT_TOL)
    zeros.add_argument("--signs-pmax", type=int, default=const.DEFAULT_SIGNS_PMAX)
    zeros.add_argument(
        "--fraction-prime",
        type=int,
        default=const.DEFAULT_FRACTION_PRIME,
        help="prime for the zero fraction band, 0 to skip (default: %(default)s)",
    )
    zeros.add_argument(
        "--fraction-refinement", type=int, default=const.DEFAULT_FRACTION_REFINEMENT
    )

    mahler = add(const.COMMAND_MAHLER, "M_q norms, Mahler measure and product bounds")
    mahler.add_argument("--pmax", type=int, default=const.DEFAULT_MAHLER_PMAX)
    mahler.add_argument("--m0-pmax", type=int, default=const.DEFAULT_M0_PMAX)
    mahler.add_argument("--samples", type=int, default=const.MAHLER_SUITE_SAMPLES)
    mahler.add_argument(
        "--product-instances", type=int, default=const.DEFAULT_PRODUCT_INSTANCES
    )
    mahler.add_argument(
        "--product-degree", type=int, default=const.DEFAULT_PRODUCT_DEGREE
    )
    mahler.add_argument("--product-prime", type=int, default=const.DEFAULT_PRODUCT_PRIME)
    mahler.add_argument(
        "--subarc-prime",
        type=int,
        default=const.DEFAULT_SUBARC_PRIME,
        help="prime for the subarc observations, 0 to skip (default: %(default)s)",
    )

    arcs = add(const.COMMAND_ARCS, "arc classification by centre value and derivative")
    _range(arcs, const.DEFAULT_ARCS_PMIN, const.DEFAULT_ARCS_PMAX)
    arcs.add_argument("--epsilon", type=float, default=const.DEFAULT_EPSILON)
    arcs.add_argument("--gamma", type=float, default=const.DEFAULT_GAMMA)
    arcs.add_argument("--samples-per-arc", type=int, default=const.ARC_SAMPLES)

    sieve = add(const.COMMAND_SIEVE, "large sieve inequality suites")
    _range(sieve, const.DEFAULT_ARCS_PMIN, const.DEFAULT_ARCS_PMAX)
    sieve.add_argument("--gamma", type=float, default=const.DEFAULT_GAMMA)
    sieve.add_argument("--samples-per-arc", type=int, default=const.ARC_SAMPLES)
    sieve.add_argument("--instances", type=int, default=const.DEFAULT_SIEVE_INSTANCES)
    sieve.add_argument("--max-degree", type=int, default=const.DEFAULT_SIEVE_DEGREE)

    cdelta = add(const.COMMAND_CDELTA, "the distribution constant c_delta")
    cdelta.add_argument(
        "--delta",
        dest="deltas",
        type=float,
        nargs="+",
        default=list(const.DEFAULT_DELTAS),
    )
    cdelta.add_argument("--tol", type=float, default=const.DEFAULT_CDELTA_TOL)
    cdelta.add_argument("--small-delta", type=float, default=const.SMALL_DELTA)
    cdelta.add_argument(
        "--no-oracle",
        dest="oracle",
        action="store_false",
        help="skip the brute-force Riemann sum",
    )

    distribution = add(
        const.COMMAND_DISTRIBUTION, "midpoint values of H_p against c_delta"
    )
    distribution.add_argument("--p", type=int, default=const.DEFAULT_DISTRIBUTION_PRIME)
    distribution.add_argument(
        "--delta", type=float, default=const.DEFAULT_DISTRIBUTION_DELTA
    )
    distribution.add_argument("--tol", type=float, default=const.DEFAULT_CDELTA_TOL)

    ensemble = add(const.COMMAND_ENSEMBLE, "random Littlewood ensemble averages")
    ensemble.add_argument("--n2", type=int, default=const.DEFAULT_ENSEMBLE_N2)
    ensemble.add_argument("--n0", type=int, default=const.DEFAULT_ENSEMBLE_N0)
    ensemble.add_argument("--samples", type=int, default=const.DEFAULT_ENSEMBLE_SAMPLES)

    rs = add(const.COMMAND_RS, "Rudin-Shapiro polynomials")
    rs.add_argument("--nmax", type=int, default=const.DEFAULT_RS_ORDER)

    certify = add(const.COMMAND_CERTIFY, "certified lower bounds for M_0(f_p)")
    certify.add_argument("--p", type=int, default=None, help="a single prime")
    _range(certify, const.DEFAULT_CERTIFY_PMIN, const.DEFAULT_CERTIFY_PMAX)
    certify.add_argument(
        "--eta", type=float, default=None, help="fixed eta (default: automatic)"
    )
    certify.add_argument("--refinement", type=int, default=const.DEFAULT_REFINEMENT)
    certify.add_argument("--bisect-tol", type=float, default=const.DEFAULT_BISECT_TOL)

    add(const.COMMAND_REPORT, "every suite with its defaults")
    return parser


def suite_params(args: argparse.Namespace) -> dict:
    """Get the keyword arguments for the suite selected by args."""
    params = {
        key: value for key, value in vars(args).items() if key not in COMMON_OPTIONS
    }
    if args.command in SEEDED_COMMANDS:
        params["seed"] = args.seed
    return params


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


async def _log_progress(event: ProgressEvent):
    _LOGGER.info(
        "%s: %s done (%d/%d)", event.command, event.subject, event.position, event.total
    )


async def _run(args: argparse.Namespace) -> int:
    async with SuiteRunner(threads=args.threads, timestamps=args.timestamps) as runner:
        runner.dispatcher.connect(const.EVENT_PRIME_FINISHED, _log_progress)
        report = await runner.run(args.command, suite_params(args))
    paths = report.write(args.out)
    print(
        "{}: {} pass, {} fail, {} observe -> {}".format(
            report.command,
            report.count(const.STATUS_PASS),
            report.count(const.STATUS_FAIL),
            report.count(const.STATUS_OBSERVE),
            paths[0],
        )
    )
    return report.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return const.EXIT_OK if exit_.code in (0, None) else const.EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return asyncio.run(_run(args))
    except DomainError as error:
        print("error: " + format_error_message(error), file=sys.stderr)
        return const.EXIT_USAGE
    except NumericalFailureError as error:
        print("numerical failure: " + format_error_message(error), file=sys.stderr)
        return const.EXIT_NUMERICAL
