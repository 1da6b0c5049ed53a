from .logger import setup_logging, bind_run_context, get_logger, LoggerMixin
from .metrics import (
    init_metrics,
    write_metrics,
    MetricsMixin,
    track_time,
    IRREPS_BUILT,
    CLOSURE_ITERATIONS,
    CLOSURE_VECTORS,
    IDENTITY_CHECKS,
    CERTIFICATES_REPLAYED,
    IRREP_DURATION,
    CLOSURE_DURATION,
    COMMAND_DURATION,
)
from .errors import (
    DivTorusError,
    ConfigError,
    BoundExceededError,
    DomainError,
    ConstructionError,
    VerificationError,
)
from .prng import Sampler

__all__ = [
    "setup_logging",
    "bind_run_context",
    "get_logger",
    "LoggerMixin",
    "init_metrics",
    "write_metrics",
    "MetricsMixin",
    "track_time",
    "IRREPS_BUILT",
    "CLOSURE_ITERATIONS",
    "CLOSURE_VECTORS",
    "IDENTITY_CHECKS",
    "CERTIFICATES_REPLAYED",
    "IRREP_DURATION",
    "CLOSURE_DURATION",
    "COMMAND_DURATION",
    "DivTorusError",
    "ConfigError",
    "BoundExceededError",
    "DomainError",
    "ConstructionError",
    "VerificationError",
    "Sampler",
]
