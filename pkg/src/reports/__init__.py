from .models import (
    Report,
    ModuleSummary,
    SuiteResult,
    AlgebraReport,
    DegreeRank,
    SeedSummary,
    BoxSummary,
    ClosureReport,
    DerhamRow,
    DerhamReport,
    KappaReport,
    ThetaReport,
    IrrepDump,
    CertificateNode,
    CertificateFile,
)
from .writer import ReportWriter

__all__ = [
    "Report",
    "ModuleSummary",
    "SuiteResult",
    "AlgebraReport",
    "DegreeRank",
    "SeedSummary",
    "BoxSummary",
    "ClosureReport",
    "DerhamRow",
    "DerhamReport",
    "KappaReport",
    "ThetaReport",
    "IrrepDump",
    "CertificateNode",
    "CertificateFile",
    "ReportWriter",
]
