"""The six campaign commands."""
from typing import Callable, Dict, List, Optional, Type
from src.config import settings
from src.fields import FieldSum, VectorField, bracket_matches_derivations, generators, random_divergence_free_field
from src.generation import (
    SeedKind,
    SeedPlacement,
    TruncationBox,
    certificate_file,
    closure,
    seed_vectors,
)
from src.modules import GradedVector, ModuleSpec, act, derham_degree_check, psi, psi_target
from src.reports import (
    AlgebraReport,
    DerhamReport,
    DerhamRow,
    IrrepDump,
    KappaReport,
    ReportWriter,
    SuiteResult,
    ThetaReport,
)
from src.representations import build_irrep, irrep_to_dict
from src.utils import IDENTITY_CHECKS, Sampler
from src.utils.rationals import format_rationals
from src.weights import (
    kappa,
    lowest_weight_by_reflections,
    lowest_weight_offset,
    theta_string_census,
    theta_string_data,
)
from .base import BaseCommand, Outcome, module_for

Check = Callable[[int], Optional[str]]


def default_label(N: int) -> List[int]:
    """The adjoint label (2) or (1,0,...,0,1)."""
    if N == 1:
        return [2]
    return [1] + [0] * (N - 2) + [1]


class VerifyAlgebraCommand(BaseCommand):
    """Exact identities of D_div and of the module action."""

    name = "verify-algebra"

    def _suite(self, name: str, count: int, check: Check) -> SuiteResult:
        result = SuiteResult(name=name, checked=count)
        for idx in range(count):
            failure = check(idx)
            outcome = "pass" if failure is None else "fail"
            self.increment_counter(IDENTITY_CHECKS, {"suite": name, "outcome": outcome})
            if failure is not None:
                result.failed += 1
                if len(result.failures) < 5:
                    result.failures.append(failure)
        return result

    def execute(self) -> Outcome:
        N, R = self.config.N, self.config.R
        sampler = Sampler(self.config.seed)
        samples = settings.jacobi_samples

        def field() -> VectorField:
            return random_divergence_free_field(sampler, N, R)

        triples = [(field(), field(), field()) for _ in range(samples)]

        def jacobi(idx: int) -> Optional[str]:
            f, g, h = triples[idx]
            total = FieldSum([f.bracket(g.bracket(h)), g.bracket(h.bracket(f)), h.bracket(f.bracket(g))])
            return None if total.is_zero() else f"{f}, {g}, {h}"

        def bracket_closure(idx: int) -> Optional[str]:
            f, g, _ = triples[idx]
            h = f.bracket(g)
            return None if h.is_divergence_zero() else f"[{f}, {g}] = {h}"

        def oracle(idx: int) -> Optional[str]:
            f, g, _ = triples[idx]
            return None if bracket_matches_derivations(f, g, radius=2) else f"{f}, {g}"

        spanning = generators(N, R)

        def spanning_set(idx: int) -> Optional[str]:
            f = spanning[idx]
            return None if f.is_divergence_zero() else str(f)

        suites = [
            self._suite("jacobi", samples, jacobi),
            self._suite("bracket-closure", samples, bracket_closure),
            self._suite("bracket-oracle", samples, oracle),
            self._suite("generators", len(spanning), spanning_set),
            self._module_axiom(sampler.spawn(1)),
        ]
        return AlgebraReport(
            passed=all(suite.passed for suite in suites),
            config=self.config,
            N=N,
            R=R,
            suites=suites,
        )

    def _module_axiom(self, sampler: Sampler) -> SuiteResult:
        config = self.config
        if config.lam is None:
            lam = default_label(config.N)
            spec = ModuleSpec.for_label(config.N, lam, config.sigma_values)
        else:
            spec = module_for(config)
        count = settings.module_axiom_samples

        def axiom(_: int) -> Optional[str]:
            f = random_divergence_free_field(sampler, spec.N, config.R)
            g = random_divergence_free_field(sampler, spec.N, config.R)
            n = sampler.degree(spec.N + 1, config.box_in)
            w = GradedVector.homogeneous(spec.dim, n, sampler.vector(spec.dim))
            left = act(spec, f.bracket(g), w)
            right = act(spec, f, act(spec, g, w)) - act(spec, g, act(spec, f, w))
            return None if left == right else f"{f}, {g} at {n}"

        return self._suite("module-axiom", count, axiom)


class IrreducibilityCommand(BaseCommand):
    """Closure from sampled seeds, checked against the predicted verdict."""

    name = "irreducibility"

    def execute(self) -> Outcome:
        config = self.config
        spec = module_for(config)
        box = TruncationBox.around(spec.N, outer=config.box_out, inner=config.box_in)
        seeds = seed_vectors(
            spec,
            SeedKind(config.seed_in),
            SeedPlacement(config.seed_at),
            box,
            Sampler(config.seed),
        )
        report, run = closure(
            spec,
            seeds,
            box,
            config.R,
            seed_kind=config.seed_in,
            seed_at=config.seed_at,
            config=config,
        )
        if config.certificates:
            ReportWriter().write_certificates(certificate_file(run), config.certificates)
        return report


class DerhamCommand(BaseCommand):
    """psi_k kernels, images and equivariance over the inner box."""

    name = "derham"

    def execute(self) -> Outcome:
        config = self.config
        N = config.N
        box = TruncationBox.around(N, outer=config.box_out, inner=config.box_in)
        degrees = box.degrees(inner=True)
        ks = [config.k] if config.k is not None else list(range(N + 1))
        sampler = Sampler(config.seed)

        rows: List[DerhamRow] = []
        equivariance: List[SuiteResult] = []
        for k in ks:
            spec = ModuleSpec.for_wedge(N, k, config.sigma_values)
            for n in degrees:
                check = derham_degree_check(spec, n)
                rows.append(
                    DerhamRow(
                        k=check.k,
                        n=list(check.degree),
                        kernel_rank=check.kernel_rank,
                        tilde_rank=check.tilde_rank,
                        image_rank=check.image_rank,
                        next_rank=check.next_rank,
                        quotient_dim=check.quotient_dim,
                        kernel_matches=check.kernel_matches,
                        image_matches=check.image_matches,
                        composition_zero=check.composition_zero,
                    )
                )
            equivariance.append(self._equivariance(spec, sampler.spawn(k)))

        ok = all(row.kernel_matches and row.image_matches and row.composition_zero for row in rows)
        return DerhamReport(
            passed=ok and all(suite.passed for suite in equivariance),
            config=config,
            N=N,
            sigma=format_rationals(config.sigma_values),
            rows=rows,
            equivariance=equivariance,
            composition_zero=all(row.composition_zero for row in rows),
        )

    def _equivariance(self, spec: ModuleSpec, sampler: Sampler) -> SuiteResult:
        name = f"equivariance k={spec.wedge_degree}"
        target = psi_target(spec)
        result = SuiteResult(name=name, checked=settings.equivariance_samples)
        for _ in range(settings.equivariance_samples):
            f = random_divergence_free_field(sampler, spec.N, self.config.R)
            n = sampler.degree(spec.N + 1, self.config.box_in)
            w = GradedVector.homogeneous(spec.dim, n, sampler.vector(spec.dim))
            ok = psi(spec, act(spec, f, w), target) == act(target, f, psi(spec, w, target))
            self.increment_counter(IDENTITY_CHECKS, {"suite": "equivariance", "outcome": "pass" if ok else "fail"})
            if not ok:
                result.failed += 1
                result.failures.append(f"{f} at {n}")
        return result


class KappaCommand(BaseCommand):
    name = "kappa"

    def execute(self) -> Outcome:
        lam = self.config.label
        value = kappa(lam)
        enumerated = lowest_weight_offset(lam)
        chain = lowest_weight_by_reflections(lam)
        matches = value == enumerated and chain[-1] == value
        return KappaReport(
            passed=matches,
            config=self.config,
            N=self.config.N,
            lam=list(lam),
            kappa=list(value),
            enumerated=list(enumerated),
            reflection_chain=[list(step) for step in chain],
            matches=matches,
        )


class ThetaStringsCommand(BaseCommand):
    name = "theta-strings"

    def execute(self) -> Outcome:
        lam = self.config.label
        data = theta_string_data(lam)
        census = theta_string_census(lam)
        tops = census.maximal_tops
        admissible = all(data.admits(top) for top in tops)
        matches = census.maximal_length == data.length and all(s.length <= data.length for s in census.strings)
        return ThetaReport(
            passed=matches and admissible,
            config=self.config,
            N=self.config.N,
            lam=list(lam),
            length=data.length,
            census_length=census.maximal_length,
            strings=len(census.strings),
            maximal_tops=[list(top) for top in tops],
            unique=census.unique_maximal,
            admissible=admissible,
            matches=matches,
        )


class DumpIrrepCommand(BaseCommand):
    name = "dump-irrep"

    def execute(self) -> Outcome:
        rep = build_irrep(self.config.N, self.config.label)
        return IrrepDump.model_validate(irrep_to_dict(rep))


COMMANDS: Dict[str, Type[BaseCommand]] = {
    command.name: command
    for command in (
        VerifyAlgebraCommand,
        IrreducibilityCommand,
        DerhamCommand,
        KappaCommand,
        ThetaStringsCommand,
        DumpIrrepCommand,
    )
}
