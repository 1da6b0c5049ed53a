"""Truncated-box submodule closure and irreducibility verdicts."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple
from src.config import RunConfig, settings
from src.fields import Degree, generators
from src.modules import GradedSubspace, GradedVector, ModuleSpec, WedgeSubmodule, act_homogeneous
from src.reports import (
    BoxSummary,
    CertificateFile,
    CertificateNode,
    ClosureReport,
    DegreeRank,
    ModuleSummary,
    SeedSummary,
)
from src.utils import (
    CLOSURE_DURATION,
    CLOSURE_ITERATIONS,
    CLOSURE_VECTORS,
    LoggerMixin,
    MetricsMixin,
    track_time,
)
from src.utils.errors import DomainError
from src.utils.linalg import Vector
from src.utils.rationals import format_rational, format_rationals
from src.weights import is_minuscule
from .box import TruncationBox
from .certificates import Certificate, Certified, count_replay, export_dag, homogeneous_parts, replay_all


class Verdict(str, Enum):
    FILLS_MODULE = "fills-module"
    FILLS_KNOWN_SUBMODULE = "fills-known-submodule"
    FILLS_QUOTIENT_PATTERN = "fills-quotient-pattern"
    INCONCLUSIVE = "inconclusive"


@dataclass
class ClosureRun:
    spec: ModuleSpec
    box: TruncationBox
    R: int
    seeds: List[GradedVector]
    subspace: GradedSubspace
    certificates: Dict[Degree, List[Certificate]] = field(default_factory=dict)
    iterations: int = 0
    accepted: int = 0
    history: List[int] = field(default_factory=list)

    def rank(self, n: Sequence[int]) -> int:
        return self.subspace.rank(n)

    def ranks(self, inner: bool = True) -> Dict[Degree, int]:
        return self.subspace.ranks(self.box.degrees(inner=inner))

    def replay(self, degrees: Optional[Sequence[Degree]] = None) -> Tuple[int, bool]:
        """Replay every stored certificate at ``degrees`` (default: inner box).

        Returns the number replayed and whether each reproduced its basis vector.
        """
        keys = [tuple(n) for n in (degrees if degrees is not None else self.box.degrees(inner=True))]
        roots: List[Certificate] = []
        expected: List[GradedVector] = []
        for n in keys:
            stored = self.certificates.get(n, [])
            generators_at = self.subspace.piece(n).generators if stored else []
            for certificate, coeffs in zip(stored, generators_at):
                roots.append(certificate)
                expected.append(GradedVector.homogeneous(self.spec.dim, n, coeffs))
        vectors = replay_all(self.spec, roots, self.seeds)
        ok = True
        for got, want in zip(vectors, expected):
            match = got == want
            count_replay(match)
            ok = ok and match
        return len(roots), ok


class ClosureEngine(LoggerMixin, MetricsMixin):
    """Fixed-point closure of seeds under generators(N, R) inside the outer box.

    Each round applies every generator, in index order, to every vector
    accepted in the previous round, in degree order. Images landing outside
    the outer box are skipped, as are targets whose fiber is already full.
    """

    def __init__(self, spec: ModuleSpec, box: TruncationBox, R: Optional[int] = None):
        if box.rank != spec.N:
            raise DomainError(f"box of rank {box.rank} for a rank {spec.N} module")
        self.spec = spec
        self.box = box
        self.R = settings.generator_radius if R is None else R
        self.fields = generators(spec.N, self.R)

    def _check_seeds(self, seeds: Sequence[GradedVector]) -> None:
        if not seeds:
            raise DomainError("closure needs at least one seed")
        for idx, seed in enumerate(seeds):
            if seed.dim != self.spec.dim:
                raise DomainError(f"seed {idx} has dim {seed.dim}, module has dim {self.spec.dim}")
            if seed.is_zero():
                raise DomainError(f"seed {idx} is zero")
            outside = [n for n in seed.degrees if not self.box.contains(n)]
            if outside:
                raise DomainError(f"seed {idx} is supported outside the outer box at {outside[0]}")

    @track_time(CLOSURE_DURATION)
    def run(self, seeds: Sequence[GradedVector]) -> ClosureRun:
        self._check_seeds(seeds)
        spec = self.spec
        run = ClosureRun(spec, self.box, self.R, list(seeds), GradedSubspace(spec.dim))

        frontier: List[Tuple[Degree, Vector, Certificate]] = []
        for idx in range(len(seeds)):
            for part in homogeneous_parts(spec, Certified.from_seed(run.seeds, idx)):
                self._accept(run, part.vector.degree, part.vector.coefficients, part.certificate, frontier)

        while frontier:
            run.iterations += 1
            self.increment_counter(CLOSURE_ITERATIONS)
            frontier.sort(key=lambda item: item[0])
            produced: List[Tuple[Degree, Vector, Certificate]] = []
            for f in self.fields:
                for n, coeffs, certificate in frontier:
                    target = tuple(a + b for a, b in zip(n, f.r))
                    if not self.box.contains(target):
                        continue
                    if run.subspace.piece(target).is_full:
                        continue
                    image = act_homogeneous(spec, f, n, coeffs)
                    self._accept(run, target, image, certificate.then(f), produced)
            frontier = produced
            run.history.append(sum(space.rank for space in run.subspace.pieces.values()))
            self.log_debug("closure round", iteration=run.iterations, accepted=len(produced))

        self.log_info(
            "closure finished",
            module=repr(spec),
            iterations=run.iterations,
            accepted=run.accepted,
            R=self.R,
        )
        return run

    def _accept(
        self,
        run: ClosureRun,
        n: Degree,
        coeffs: Vector,
        certificate: Certificate,
        frontier: List[Tuple[Degree, Vector, Certificate]],
    ) -> None:
        if run.subspace.piece(n).insert(coeffs):
            run.certificates.setdefault(n, []).append(certificate)
            run.accepted += 1
            self.increment_counter(CLOSURE_VECTORS)
            frontier.append((n, tuple(coeffs), certificate))


@dataclass(frozen=True)
class Prediction:
    verdicts: FrozenSet[Verdict]
    expected: Dict[Degree, int]


def predicted_verdicts(spec: ModuleSpec, seeds: Sequence[GradedVector], box: TruncationBox) -> Prediction:
    """What the irreducibility theorems predict for the submodule generated by ``seeds``.

    Non-minuscule: everything. For omega_k: seeds in W_k generate W_k, seeds
    in W~_k generate W~_k, and anything else fills the module, except for
    k = 0 where C q^{-sigma} is never reached from other degrees.
    """
    inner = box.degrees(inner=True)
    full = {n: spec.dim for n in inner}
    k = spec.wedge_degree
    if k is None:
        if is_minuscule(spec.lam):
            raise DomainError(f"minuscule lambda={spec.lam} needs the wedge model F^sigma(omega_k)")
        return Prediction(frozenset({Verdict.FILLS_MODULE}), full)

    plain = WedgeSubmodule(spec)
    tilde = WedgeSubmodule(spec, tilde=True)
    if k > 0 and all(plain.contains(seed) for seed in seeds):
        return Prediction(frozenset({Verdict.FILLS_KNOWN_SUBMODULE}), {n: plain.expected_rank(n) for n in inner})
    if all(tilde.contains(seed) for seed in seeds):
        return Prediction(frozenset({Verdict.FILLS_KNOWN_SUBMODULE}), {n: tilde.expected_rank(n) for n in inner})
    if k == 0 and spec.degenerate_degree in inner:
        return Prediction(
            frozenset({Verdict.FILLS_QUOTIENT_PATTERN}),
            {n: spec.dim - tilde.expected_rank(n) for n in inner},
        )
    return Prediction(frozenset({Verdict.FILLS_MODULE}), full)


def classify(run: ClosureRun) -> Verdict:
    spec = run.spec
    inner = run.box.degrees(inner=True)
    if all(run.rank(n) == spec.dim for n in inner):
        return Verdict.FILLS_MODULE
    if spec.wedge_degree is None:
        return Verdict.INCONCLUSIVE
    pieces = {n: run.subspace.piece(n) for n in inner}
    tilde = WedgeSubmodule(spec, tilde=True)
    for known in (WedgeSubmodule(spec), tilde):
        if all(pieces[n] == known.piece(n) for n in inner):
            return Verdict.FILLS_KNOWN_SUBMODULE
    if all(run.rank(n) == spec.dim - tilde.expected_rank(n) for n in inner):
        return Verdict.FILLS_QUOTIENT_PATTERN
    return Verdict.INCONCLUSIVE


def summarize(spec: ModuleSpec) -> ModuleSummary:
    return ModuleSummary(
        N=spec.N,
        lam=list(spec.lam),
        sigma=format_rationals(spec.sigma),
        dim=spec.dim,
        k=spec.wedge_degree,
    )


def closure(
    spec: ModuleSpec,
    seeds: Sequence[GradedVector],
    box: TruncationBox,
    R: Optional[int] = None,
    seed_kind: str = "custom",
    seed_at: str = "-",
    config: Optional[RunConfig] = None,
) -> Tuple[ClosureReport, ClosureRun]:
    """Run the closure, classify the inner box and compare with the prediction."""
    run = ClosureEngine(spec, box, R).run(seeds)
    prediction = predicted_verdicts(spec, seeds, box)
    verdict = classify(run)
    replayed, replay_ok = run.replay()
    ranks = [
        DegreeRank(n=list(n), achieved=run.rank(n), expected=prediction.expected[n], full=spec.dim)
        for n in box.degrees(inner=True)
    ]
    report = ClosureReport(
        passed=replay_ok and verdict in prediction.verdicts,
        config=config,
        module=summarize(spec),
        seed=SeedSummary(
            kind=seed_kind,
            at=seed_at,
            degrees=[list(n) for n in sorted({n for seed in seeds for n in seed.degrees})],
            count=len(seeds),
        ),
        generator_radius=run.R,
        box=BoxSummary(outer=box.outer, inner=box.inner, center=list(box.center)),
        iterations=run.iterations,
        accepted=run.accepted,
        ranks=ranks,
        verdict=verdict.value,
        predicted=sorted(v.value for v in prediction.verdicts),
        certificates_replayed=replayed,
        replay_ok=replay_ok,
    )
    return report, run


def certificate_file(run: ClosureRun, word_limit: int = 32) -> CertificateFile:
    """The replay file for the inner box: shared DAG, roots per degree, short word expansions."""
    keys = [n for n in run.box.degrees(inner=True) if run.certificates.get(n)]
    roots = [certificate for n in keys for certificate in run.certificates[n]]
    records, root_ids = export_dag(roots)
    by_degree: Dict[str, List[int]] = {}
    words: Dict[str, List[str]] = {}
    cursor = 0
    for n in keys:
        label = ",".join(str(a) for a in n)
        count = len(run.certificates[n])
        by_degree[label] = root_ids[cursor:cursor + count]
        cursor += count
        lines = []
        for certificate in run.certificates[n]:
            expansion = certificate.operator_words(limit=word_limit)
            if expansion is None:
                lines.append(f"<{certificate.size} nodes>")
                continue
            lines.append(
                " + ".join(f"{format_rational(c)} * {' '.join(reversed(word))} {source}".replace("  ", " ")
                           for c, source, word in expansion)
            )
        words[label] = lines
    return CertificateFile(
        module=summarize(run.spec),
        seeds=[seed.to_json() for seed in run.seeds],
        nodes=[CertificateNode.model_validate(record) for record in records],
        roots=by_degree,
        words=words,
    )
