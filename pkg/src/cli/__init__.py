from .base import BaseCommand, module_for
from .commands import (
    COMMANDS,
    VerifyAlgebraCommand,
    IrreducibilityCommand,
    DerhamCommand,
    KappaCommand,
    ThetaStringsCommand,
    DumpIrrepCommand,
)
from .app import EXIT_OK, EXIT_FAILED, EXIT_USAGE, build_parser, parse_config, main

__all__ = [
    "BaseCommand",
    "module_for",
    "COMMANDS",
    "VerifyAlgebraCommand",
    "IrreducibilityCommand",
    "DerhamCommand",
    "KappaCommand",
    "ThetaStringsCommand",
    "DumpIrrepCommand",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
    "build_parser",
    "parse_config",
    "main",
]
