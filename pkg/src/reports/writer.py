import sys
from pathlib import Path
from typing import Literal, Optional, TextIO, Union
from src.utils import LoggerMixin
from src.utils.errors import ConfigError
from .models import CertificateFile, IrrepDump, Report

Renderable = Union[Report, IrrepDump, CertificateFile]


class ReportWriter(LoggerMixin):
    """Writes reports as JSON or text to a file or to stdout."""

    def __init__(
        self,
        format: Literal["json", "text"] = "text",
        out: Optional[str] = None,
        stream: Optional[TextIO] = None,
    ):
        self.format = format
        self.out = out
        self.stream = stream

    def render(self, report: Renderable) -> str:
        if isinstance(report, CertificateFile):
            return report.model_dump_json(indent=2) + "\n"
        if self.format == "json":
            return report.to_json() + "\n"
        return report.to_text()

    def write(self, report: Renderable) -> str:
        text = self.render(report)
        if self.out:
            try:
                Path(self.out).write_text(text, encoding="utf-8")
            except OSError as e:
                raise ConfigError(f"cannot write report to {self.out}: {e}") from e
            self.log_info("Report written", path=self.out, format=self.format)
        else:
            (self.stream or sys.stdout).write(text)
        return text

    def write_certificates(self, certificates: CertificateFile, path: str) -> None:
        try:
            Path(path).write_text(self.render(certificates), encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot write certificates to {path}: {e}") from e
        self.log_info("Certificates written", path=path, nodes=len(certificates.nodes))
