import argparse
import sys
from typing import List, Optional

from codes import DegenerateTarget
from gf import FieldError
from measure import ParameterOrderError
from noise import DomainError
from regev import DegenerateDual, InfeasibleReduction
from solvers import UnsupportedProfile
from utils.budget import BudgetExceeded
from utils.logging_config import get_logger, log_event

from .commands import COMMANDS, run_command
from .exceptions import CliError, UsageError
from .output import OutputSink
from .schemas import SOLVERS, VARIANTS, CODE_FAMILIES, load_run_config

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2

# parameter errors raised inside the numerical packages count as usage errors
PARAMETER_ERRORS = (DomainError, FieldError, InfeasibleReduction, ParameterOrderError,
                    UnsupportedProfile, DegenerateDual, DegenerateTarget)


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    s = argparse.SUPPRESS
    parser.add_argument("--config", default=None, help="YAML run configuration; flags override its values")
    parser.add_argument("--field", default=s, help='field descriptor "p^s", e.g. 2, 3^1, 2^2')
    parser.add_argument("--n", type=int, default=s, help="code length")
    parser.add_argument("--k", type=int, default=s, help="code dimension (k' of the target code for reduce and prange)")
    parser.add_argument("--omega", type=float, default=s, help="noise level (t of the phase profile with --theta)")
    parser.add_argument("--omega-prime", dest="omega_prime", type=float, default=s, help="relative weight target")
    parser.add_argument("--theta", type=float, default=s, help="relative phase of the binary phase profile")
    parser.add_argument("--keep-fraction", dest="keep_fraction", type=float, default=s)
    parser.add_argument("--epsilon", type=float, default=s, help="USD path slack above the rate")
    parser.add_argument("--trials", type=int, default=s)
    parser.add_argument("--seed", type=int, default=s)
    parser.add_argument("--budget", type=int, default=s, help="enumeration budget (elements)")
    parser.add_argument("--workers", type=int, default=s)
    parser.add_argument("--solver", choices=SOLVERS, default=s)
    parser.add_argument("--variant", choices=VARIANTS, default=s)
    parser.add_argument("--code", choices=CODE_FAMILIES, default=s)
    parser.add_argument("--rates", type=float_list, default=s, help="comma-separated rate grid")
    parser.add_argument("--omega-grid", dest="omega_grid", type=float_list, default=s)
    parser.add_argument("--out", default=s, help="output directory (stdout when omitted)")
    parser.add_argument("--format", choices=["csv", "json"], default=s)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="qdp",
        description="Quantum decoding problem experiments: thresholds, solvers, PGM spectra and reductions.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", parser_class=ArgumentParser)
    subparsers.required = True
    for name in COMMANDS:
        _add_run_flags(subparsers.add_parser(name))
    return parser


def main(argv: Optional[List[str]] = None, stream=None) -> int:
    """Parse, validate, run one subcommand; returns the process exit code."""
    try:
        args = vars(build_parser().parse_args(argv))
        config_path = args.pop("config", None)
        run_config = load_run_config(args, config_path)
        sink = OutputSink(run_config, stream=stream)
        log_event(
            logger, "info", f"Running {run_config.subcommand}", event_type="cli",
            subcommand=run_config.subcommand, seed=run_config.seed, config_hash=sink.config_hash,
        )
        run_command(run_config, sink)
    except CliError as err:
        log_event(logger, "error", str(err), event_type="cli",
                  extra={"error_type": type(err).__name__, "failures": getattr(err, "failures", None)})
        return err.exit_code
    except BudgetExceeded as err:
        log_event(logger, "error", str(err), event_type="cli", extra={"error_type": "BudgetExceeded"})
        return EXIT_BUDGET
    except PARAMETER_ERRORS as err:
        log_event(logger, "error", str(err), event_type="cli", extra={"error_type": type(err).__name__})
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
