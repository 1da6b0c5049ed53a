"""Report models. Every rational is a "p/q" string so the JSON surface is exact."""
from typing import Dict, List, Optional, Union
from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.config import RunConfig


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    command: str
    passed: bool
    config: Optional[RunConfig] = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.model_validate_json(text)

    def text_lines(self) -> List[str]:
        return [f"{self.command}: {'pass' if self.passed else 'FAIL'}"]

    def to_text(self) -> str:
        return "\n".join(self.text_lines()) + "\n"


class ModuleSummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    N: int
    lam: List[int] = Field(alias="lambda")
    sigma: List[str]
    dim: int
    k: Optional[int] = None

    def describe(self) -> str:
        label = f"omega_{self.k}" if self.k is not None else "(" + ",".join(map(str, self.lam)) + ")"
        return f"F^sigma({label}), N={self.N}, sigma=({', '.join(self.sigma)}), dim V={self.dim}"


class SuiteResult(BaseModel):
    name: str
    checked: int
    failed: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        return f"{self.name}: {self.checked - self.failed}/{self.checked} pass"


class AlgebraReport(Report):
    command: str = "verify-algebra"
    N: int
    R: int
    suites: List[SuiteResult]

    def text_lines(self) -> List[str]:
        lines = [f"D_div on the {self.N + 1}-torus, generator radius R={self.R}"]
        lines += [suite.line() for suite in self.suites]
        for suite in self.suites:
            lines += [f"  {suite.name} failure: {item}" for item in suite.failures]
        return lines + super().text_lines()


class DegreeRank(BaseModel):
    n: List[int]
    achieved: int
    expected: int
    full: int

    @model_validator(mode="after")
    def validate_bound(self) -> "DegreeRank":
        if self.achieved > self.full:
            raise ValueError(f"rank {self.achieved} at {self.n} exceeds dim {self.full}")
        return self


class SeedSummary(BaseModel):
    kind: str
    at: str
    degrees: List[List[int]]
    count: int


class BoxSummary(BaseModel):
    outer: int
    inner: int
    center: List[int]


class ClosureReport(Report):
    command: str = "irreducibility"
    module: ModuleSummary
    seed: SeedSummary
    generator_radius: int
    box: BoxSummary
    iterations: int
    accepted: int
    ranks: List[DegreeRank]
    verdict: str
    predicted: List[str]
    certificates_replayed: int = 0
    replay_ok: bool = True

    def text_lines(self) -> List[str]:
        lines = [
            self.module.describe(),
            f"seed: {self.seed.kind} at {self.seed.at} ({self.seed.count} vectors)",
            f"R={self.generator_radius}, box out={self.box.outer} in={self.box.inner}, "
            f"iterations={self.iterations}, accepted={self.accepted}",
            "degree | achieved | expected | dim",
        ]
        for row in self.ranks:
            lines.append(f"{tuple(row.n)} | {row.achieved} | {row.expected} | {row.full}")
        lines.append(f"certificates replayed: {self.certificates_replayed} ({'ok' if self.replay_ok else 'MISMATCH'})")
        lines.append(f"verdict: {self.verdict} (predicted: {', '.join(self.predicted)})")
        return lines + super().text_lines()


class DerhamRow(BaseModel):
    k: int
    n: List[int]
    kernel_rank: int
    tilde_rank: int
    image_rank: int
    next_rank: int
    quotient_dim: int
    kernel_matches: bool
    image_matches: bool
    composition_zero: bool


class DerhamReport(Report):
    command: str = "derham"
    N: int
    sigma: List[str]
    rows: List[DerhamRow]
    equivariance: List[SuiteResult]
    composition_zero: bool

    def text_lines(self) -> List[str]:
        lines = [f"psi_k on F^sigma(omega_k), N={self.N}, sigma=({', '.join(self.sigma)})"]
        lines.append("k | degree | ker | W~ | im | W_next | quotient | ok")
        for row in self.rows:
            ok = row.kernel_matches and row.image_matches and row.composition_zero
            lines.append(
                f"{row.k} | {tuple(row.n)} | {row.kernel_rank} | {row.tilde_rank} | "
                f"{row.image_rank} | {row.next_rank} | {row.quotient_dim} | {'pass' if ok else 'FAIL'}"
            )
        lines += [suite.line() for suite in self.equivariance]
        lines.append(f"psi∘psi = 0: {'pass' if self.composition_zero else 'FAIL'}")
        return lines + super().text_lines()


class KappaReport(Report):
    command: str = "kappa"
    N: int
    lam: List[int] = Field(alias="lambda")
    kappa: List[int]
    enumerated: List[int]
    reflection_chain: List[List[int]]
    matches: bool

    def text_lines(self) -> List[str]:
        verdict = "matches enumeration" if self.matches else "DIFFERS from enumeration"
        lines = [f"({','.join(map(str, self.kappa))}) [{verdict}]"]
        lines += [f"  {tuple(step)}" for step in self.reflection_chain]
        return lines + super().text_lines()


class ThetaReport(Report):
    command: str = "theta-strings"
    N: int
    lam: List[int] = Field(alias="lambda")
    length: int
    census_length: int
    strings: int
    maximal_tops: List[List[int]]
    unique: bool
    admissible: bool
    matches: bool

    def text_lines(self) -> List[str]:
        shape = "unique maximal string" if self.unique else f"{len(self.maximal_tops)} maximal strings"
        lines = [f"length {self.length}, {shape}"]
        lines.append(f"strings enumerated: {self.strings}, longest {self.census_length}")
        lines += [f"  top {tuple(top)}" for top in self.maximal_tops]
        return lines + super().text_lines()


class IrrepDump(BaseModel):
    """The Irrep interchange format: sparse rows of [column, "p/q"] per E_ij."""

    model_config = ConfigDict(populate_by_name=True)

    N: int
    lam: List[int] = Field(alias="lambda")
    dim: int
    weights: List[List[int]]
    E: Dict[str, List[List[List[Union[int, str]]]]]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True)

    def to_text(self) -> str:
        return self.to_json() + "\n"


class CertificateNode(BaseModel):
    id: int
    op: str
    seed: Optional[int] = None
    label: Optional[str] = None
    vector: Optional[List[Dict[str, List[Union[int, str]]]]] = None
    field: Optional[str] = None
    of: Optional[int] = None
    terms: Optional[List[List[Union[int, str]]]] = None


class CertificateFile(BaseModel):
    """Replay file: seeds, one shared node DAG, and the root node of each basis vector per degree."""

    module: ModuleSummary
    seeds: List[List[Dict[str, List[Union[int, str]]]]]
    nodes: List[CertificateNode]
    roots: Dict[str, List[int]]
    words: Dict[str, List[str]] = Field(default_factory=dict)
