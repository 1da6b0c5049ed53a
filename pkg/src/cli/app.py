"""Command-line front end.

Exit codes:
    0: every check agrees with the theorems
    1: a mathematical inconsistency or a failed replay
    2: usage or configuration error, or a desk-scale bound exceeded
"""
import argparse
import sys
from typing import Any, Dict, List, Optional
from pydantic import ValidationError
from src.config import RunConfig, settings
from src.reports import ReportWriter
from src.utils import bind_run_context, get_logger, init_metrics, setup_logging, write_metrics
from src.utils.errors import (
    BoundExceededError,
    ConfigError,
    ConstructionError,
    DomainError,
    VerificationError,
)
from .commands import COMMANDS

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so every usage error maps to exit 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(
        prog="divtorus",
        description="Exact verification campaigns for tensor modules of divergence-zero vector fields",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageParser)
    for name in COMMANDS:
        cmd = sub.add_parser(name, help=(COMMANDS[name].__doc__ or name).strip().splitlines()[0])
        cmd.add_argument("--N", type=int, default=2, help="Rank; the algebra is sl_{N+1} (default: 2)")
        cmd.add_argument("--lambda", dest="lam", help='Highest weight label, e.g. "1,0"')
        cmd.add_argument(
            "--sigma",
            help='N+1 rationals, e.g. "1/3,0,0"; use --sigma=-1/2,... for a leading minus',
        )
        cmd.add_argument("--R", type=int, help=f"Generator radius (default: {settings.generator_radius})")
        cmd.add_argument("--box-out", type=int, help=f"Outer box radius (default: {settings.box_outer})")
        cmd.add_argument("--box-in", type=int, help=f"Inner box radius (default: {settings.box_inner})")
        cmd.add_argument("--seed", type=int, help="PRNG seed; DIVTORUS_SEED takes precedence")
        cmd.add_argument("--format", choices=["json", "text"], default="text")
        cmd.add_argument("--out", help="Write the report here instead of stdout")
        cmd.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
        if name == "irreducibility":
            cmd.add_argument("--seed-in", choices=["random", "W", "outside"], default="random")
            cmd.add_argument(
                "--seed-at", choices=["0", "-sigma"], default="0", help="Pass as --seed-at=-sigma"
            )
            cmd.add_argument("--certificates", help="Write the certificate replay file here")
        if name == "derham":
            cmd.add_argument("--k", type=int, help="Wedge degree (default: all 0..N)")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """argv -> validated RunConfig; ConfigError on anything malformed."""
    args = build_parser().parse_args(argv)
    values: Dict[str, Any] = {
        key: value for key, value in vars(args).items() if value is not None
    }
    if settings.seed_from_environment:
        values["seed"] = settings.seed
    if "lam" in values:
        values["lambda"] = values.pop("lam")
    try:
        return RunConfig.model_validate(values)
    except ValidationError as e:
        raise ConfigError("; ".join(err["msg"] for err in e.errors())) from e


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ConfigError as e:
        setup_logging()
        logger.error("Invalid arguments", error=str(e))
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.log_level)
    bind_run_context(command=config.command, N=config.N, seed=config.seed)
    init_metrics(config.command)

    try:
        command = COMMANDS[config.command](config)
        report, passed = command.run()
        ReportWriter(config.format, config.out).write(report)
        status = EXIT_OK if passed else EXIT_FAILED
    except (ConfigError, BoundExceededError, DomainError, ValidationError) as e:
        logger.error("Command rejected", command=config.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        status = EXIT_USAGE
    except (VerificationError, ConstructionError) as e:
        logger.error("Inconsistency detected", command=config.command, error=str(e))
        print(f"inconsistency: {e}", file=sys.stderr)
        status = EXIT_FAILED

    if settings.metrics_file:
        write_metrics(settings.metrics_file)
    return status
