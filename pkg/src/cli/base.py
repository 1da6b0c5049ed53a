import time
from abc import ABC, abstractmethod
from typing import Tuple, Union
from src.config import RunConfig
from src.modules import ModuleSpec
from src.reports import IrrepDump, Report
from src.representations import fundamental_label
from src.utils import COMMAND_DURATION, LoggerMixin, MetricsMixin
from src.utils.errors import DomainError
from src.weights import is_minuscule

Outcome = Union[Report, IrrepDump]


def module_for(config: RunConfig) -> ModuleSpec:
    """F^sigma(lambda) for the configured label; minuscule labels get the wedge model."""
    lam = config.label
    sigma = config.sigma_values
    if is_minuscule(lam):
        k = next((p for p in range(1, config.N + 1) if fundamental_label(config.N, p) == lam), 0)
        return ModuleSpec.for_wedge(config.N, k, sigma)
    return ModuleSpec.for_label(config.N, lam, sigma)


class BaseCommand(ABC, LoggerMixin, MetricsMixin):
    """Base class for every campaign command."""

    name: str = ""

    def __init__(self, config: RunConfig):
        if config.command != self.name:
            raise DomainError(f"{type(self).__name__} cannot run {config.command!r}")
        self.config = config

    @abstractmethod
    def execute(self) -> Outcome:
        """Run the campaign and build its report."""
        pass

    def run(self) -> Tuple[Outcome, bool]:
        """Execute, time the run and return the report with its pass flag."""
        self.log_info("Command started", command=self.name, N=self.config.N)
        start = time.perf_counter()
        try:
            report = self.execute()
        finally:
            self.observe(COMMAND_DURATION, time.perf_counter() - start, {"command": self.name})
        passed = report.passed if isinstance(report, Report) else True
        if not passed:
            self.log_warning("Checks failed", command=self.name)
        self.log_info("Command finished", command=self.name, passed=passed)
        return report, passed
