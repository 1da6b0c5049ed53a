from typing import Any, Callable, Dict, Optional, TypeVar
from prometheus_client import Counter, Histogram, Info, REGISTRY, write_to_textfile
from functools import wraps
import time
from src.config import settings

F = TypeVar("F", bound=Callable[..., Any])


# Metrics definitions
IRREPS_BUILT = Counter(
    "divtorus_irreps_built_total",
    "Total number of sl_{N+1} irreducible modules constructed",
    ["kind"]
)

CLOSURE_ITERATIONS = Counter(
    "divtorus_closure_iterations_total",
    "Total number of closure fixed-point iterations"
)

CLOSURE_VECTORS = Counter(
    "divtorus_closure_vectors_accepted_total",
    "Total number of vectors accepted into per-degree closure bases"
)

IDENTITY_CHECKS = Counter(
    "divtorus_identity_checks_total",
    "Total number of exact identity checks",
    ["suite", "outcome"]
)

CERTIFICATES_REPLAYED = Counter(
    "divtorus_certificates_replayed_total",
    "Total number of certificate replays",
    ["outcome"]
)

IRREP_DURATION = Histogram(
    "divtorus_irrep_construction_seconds",
    "Time spent constructing irreducible modules",
    ["kind"]
)

CLOSURE_DURATION = Histogram(
    "divtorus_closure_seconds",
    "Time spent in submodule closure runs"
)

COMMAND_DURATION = Histogram(
    "divtorus_command_seconds",
    "Time spent running CLI commands",
    ["command"]
)

RUN_INFO = Info(
    "divtorus_run",
    "Run information"
)


def track_time(metric: Histogram, **labels: str) -> Callable[[F], F]:
    """Decorator to track execution time of functions."""
    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                if settings.enable_metrics:
                    target = metric.labels(**labels) if labels else metric
                    target.observe(time.perf_counter() - start)
        return wrapper  # type: ignore[return-value]
    return decorator


def init_metrics(command: str) -> None:
    """Initialize metrics with default values."""
    if settings.enable_metrics:
        RUN_INFO.info({
            "version": "1.0.0",
            "command": command,
        })


def write_metrics(path: str) -> None:
    """Dump the default registry in text exposition format."""
    write_to_textfile(path, REGISTRY)


class MetricsMixin:
    """Mixin class to add metrics capabilities to any class."""

    def increment_counter(
        self,
        counter: Counter,
        labels: Optional[Dict[str, str]] = None,
        value: int = 1
    ) -> None:
        if settings.enable_metrics:
            if labels:
                counter.labels(**labels).inc(value)
            else:
                counter.inc(value)

    def observe(
        self,
        histogram: Histogram,
        value: float,
        labels: Optional[Dict[str, str]] = None
    ) -> None:
        if settings.enable_metrics:
            if labels:
                histogram.labels(**labels).observe(value)
            else:
                histogram.observe(value)
