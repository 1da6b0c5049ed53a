import pytest
from sympy.polys.domains import QQ
from src.config import settings
from src.modules import GradedVector, ModuleSpec, WedgeSubmodule, root_field
from src.representations import wedge_vector
from src.generation import (
    ClosureEngine,
    Certified,
    SeedKind,
    SeedPlacement,
    TruncationBox,
    Verdict,
    basis_wedge,
    certificate_file,
    closure,
    export_dag,
    extract_hw_component,
    extract_hw_vector,
    extract_power,
    fill_from_hw,
    homogeneous_parts,
    hw_supplier,
    lowering_words,
    predicted_verdicts,
    pure_wedge,
    replay_minuscule,
    replay_non_minuscule,
    seed_vectors,
    spread_pure_wedge,
    tilde_checks,
    top_class,
    translate_degree,
    translate_top_wedge,
    translate_w1,
    wedge_weight_vector,
)
from src.utils import DomainError, Sampler
from src.utils.linalg import unit_vector


def seeded(vector):
    seeds = [vector]
    return seeds, Certified.from_seed(seeds, 0)


def hw_at(spec, n):
    return GradedVector.homogeneous(spec.dim, n, unit_vector(spec.dim, spec.rep.hw_index))


def wedge_at(spec, n, coefficients):
    return GradedVector.homogeneous(spec.dim, n, wedge_vector(spec.rep, coefficients))


# Module grids shared by the randomized classes below. Each sigma keeps its last
# coordinate integral so the last-coordinate branch of translate_degree is reachable.
NON_MINUSCULE = [(1, (2,)), (2, (1, 1)), (2, (2, 0))]
SIGMAS = {
    1: {"fractional": (QQ(1, 2), 0), "integral": (1, -1), "zero": (0, 0)},
    2: {"fractional": (QQ(1, 3), 0, 0), "integral": (1, 0, -1), "zero": (0, 0, 0)},
    3: {"fractional": (QQ(1, 2), 0, 0, 0), "integral": (1, 0, 0, 0)},
}


def random_inputs(spec, sampler, count=20):
    """Pairs (start, target); the degenerate degree and a last-coordinate target come first."""
    N = spec.N
    last = -int(spec.sigma[N].numerator)
    pairs = [((0,) * N + (last + 1,), (1,) + (0,) * (N - 1) + (last,))]
    if spec.sigma_integral:
        pairs.append((spec.degenerate_degree, sampler.degree(N + 1, 2)))
    while len(pairs) < count:
        pairs.append((sampler.degree(N + 1, 2), sampler.degree(N + 1, 2)))
    return pairs


class TestTruncationBox:
    def test_degrees_and_membership(self):
        box = TruncationBox.around(2, outer=3, inner=1)
        assert box.rank == 2
        assert len(box.degrees(inner=True)) == 27
        assert len(box.degrees()) == 343
        assert box.contains((3, -3, 0))
        assert not box.contains((3, -3, 0), inner=True)
        assert not box.contains((0, 0))

    def test_invalid(self):
        with pytest.raises(DomainError):
            TruncationBox(outer=1, inner=2, center=(0, 0))
        with pytest.raises(DomainError):
            TruncationBox(outer=2, inner=1)
        with pytest.raises(DomainError):
            TruncationBox(outer=-1, inner=0, center=(0, 0))


class TestCertificates:
    def test_homogeneous_parts(self, sl2_adjoint):
        w = GradedVector.from_mapping(3, {(0, 0): [1, 2, 0], (1, -1): [0, 0, 3]})
        seeds, item = seeded(w)
        parts = homogeneous_parts(sl2_adjoint, item)
        assert [part.vector.degree for part in parts] == [(0, 0), (1, -1)]
        assert parts[0].vector == GradedVector.homogeneous(3, (0, 0), [1, 2, 0])
        assert all(part.verify(sl2_adjoint, seeds) for part in parts)

    def test_dag_is_topological(self, sl2_adjoint):
        seeds, item = seeded(hw_at(sl2_adjoint, (0, 0)))
        shared = item.act(sl2_adjoint, root_field(sl2_adjoint, 1, 2, 1))
        total = shared + shared.scaled(2)
        records, _ = export_dag([total.certificate, shared.certificate])
        assert records[0]["op"] == "seed"
        assert len(records) == 4
        for record in records:
            refs = [record["of"]] if "of" in record else [ref for _, ref in record.get("terms", [])]
            assert all(ref < record["id"] for ref in refs)
        assert total.verify(sl2_adjoint, seeds)

    def test_operator_words(self, sl2_adjoint):
        seeds, item = seeded(hw_at(sl2_adjoint, (0, 0)))
        f = root_field(sl2_adjoint, 1, 2, 1)
        words = item.act(sl2_adjoint, f).scaled(3).certificate.operator_words()
        assert words == [(QQ(3), "seed[0]", ("D([1,0],[0,1])",))]


class TestHighestWeight:
    def test_component_of_highest_weight_vector(self, sl3_adjoint):
        _, item = seeded(hw_at(sl3_adjoint, (0, 0, 0)))
        extraction = extract_hw_component(sl3_adjoint, item)
        assert extraction.steps == ()
        assert extraction.result is item

    def test_sl2_lowest_weight(self, sl2_adjoint):
        rep = sl2_adjoint.rep
        seeds, item = seeded(GradedVector.homogeneous(3, (0, 0), unit_vector(3, rep.lw_index)))
        component = extract_hw_component(sl2_adjoint, item)
        assert len(component.steps) == 2
        top = extract_hw_vector(sl2_adjoint, component.result)
        assert rep.is_highest_weight_vector(top.result.vector.coefficients)
        assert top.result.verify(sl2_adjoint, seeds)

    def test_random_sl3_vector(self, sl3_adjoint, sampler):
        rep = sl3_adjoint.rep
        seeds, item = seeded(GradedVector.homogeneous(8, (1, 0, -1), sampler.vector(8)))
        component = extract_hw_component(sl3_adjoint, item)
        top = extract_hw_vector(sl3_adjoint, component.result)
        coeffs = top.result.vector.coefficients
        assert rep.is_highest_weight_vector(coeffs)
        assert coeffs[rep.hw_index]
        assert top.result.verify(sl3_adjoint, seeds)

    @pytest.mark.parametrize("k", [2, 3])
    def test_extract_power(self, sl3_adjoint, sampler, k):
        w = GradedVector.homogeneous(8, (0, 1, 0), sampler.vector(8))
        seeds, item = seeded(w)
        power = extract_power(sl3_adjoint, 3, 1, k, item)
        expected = sl3_adjoint.rep.apply_power(3, 1, k, w.coefficients)
        assert power.vector == GradedVector.homogeneous(8, (0, 1, 0), expected)
        assert power.verify(sl3_adjoint, seeds)

    def test_minuscule_rejected(self, omega1_fractional):
        _, item = seeded(wedge_at(omega1_fractional, (0, 0, 0), {(1,): 1}))
        with pytest.raises(DomainError):
            extract_hw_vector(omega1_fractional, item)


class TestTranslation:
    def test_detour_when_both_pairings_vanish(self):
        spec = ModuleSpec.for_label(1, (2,), (0, 0))
        seeds, item = seeded(hw_at(spec, (0, 0)))
        moved = translate_degree(spec, item, (1, 0))
        assert moved.result.vector == hw_at(spec, (1, 0))
        assert any(step.startswith("first (detour)") for step in moved.steps)
        assert moved.result.verify(spec, seeds)

    def test_degenerate_last_coordinate(self):
        spec = ModuleSpec.for_label(1, (2,), (0, 0))
        seeds, item = seeded(hw_at(spec, (1, 1)))
        moved = translate_degree(spec, item, (2, 0))
        assert moved.result.vector == hw_at(spec, (2, 0))
        assert moved.result.verify(spec, seeds)

    def test_general_target(self, sl3_adjoint):
        seeds, item = seeded(hw_at(sl3_adjoint, (0, 0, 0)).scaled(5))
        moved = translate_degree(sl3_adjoint, item, (2, -1, 1))
        assert moved.result.vector == hw_at(sl3_adjoint, (2, -1, 1))
        assert moved.result.verify(sl3_adjoint, seeds)


class TestFill:
    def test_lowering_words_are_prefix_closed(self, sl3_adjoint):
        words = [word for word, _ in lowering_words(sl3_adjoint.rep)]
        assert len(words) == 8
        assert all(word[:-1] in words for word in words if word)

    def test_fibers_fill(self, sl2_adjoint):
        seeds, item = seeded(hw_at(sl2_adjoint, (0, 0)))
        degrees = [(0, 0), (1, -1), (-1, 2)]
        filled = fill_from_hw(sl2_adjoint, hw_supplier(sl2_adjoint, item), degrees)
        assert filled.ranks() == {n: 3 for n in degrees}
        assert all(basis.verify(sl2_adjoint, seeds) for n in degrees for basis in filled.certificates[n])


class TestWedgeReduction:
    def test_omega1_in_rank_two(self, omega1_fractional):
        spec = omega1_fractional
        seed = wedge_at(spec, (0, 0, 0), {(1,): 1, (2,): 2, (3,): -1})
        seeds, item = seeded(seed)
        reduction = wedge_weight_vector(spec, item)
        assert (reduction.x, reduction.y, reduction.indices) == (1, 3, (3,))
        assert pure_wedge(spec, reduction.result.vector) == ((3,), QQ(2, 3))
        assert reduction.result.verify(spec, seeds, tilde_checks(spec))

    def test_omega2_in_rank_three(self):
        spec = ModuleSpec.for_wedge(3, 2, (QQ(1, 2), 0, 0, 0))
        seed = wedge_at(spec, (0, 0, 0, 0), {(1, 2): 1, (3, 4): 1})
        seeds, item = seeded(seed)
        reduction = wedge_weight_vector(spec, item)
        assert (reduction.x, reduction.y, reduction.indices) == (1, 2, (2, 3))
        assert pure_wedge(spec, reduction.result.vector) == ((2, 3), QQ(1, 4))
        assert reduction.result.verify(spec, seeds, tilde_checks(spec))

    def test_class_in_tilde_rejected(self, omega1_fractional):
        _, item = seeded(wedge_at(omega1_fractional, (0, 0, 0), {(1,): 1}))
        with pytest.raises(DomainError):
            wedge_weight_vector(omega1_fractional, item)

    def test_translate_w1(self, omega1_fractional):
        spec = omega1_fractional
        seeds, item = seeded(wedge_at(spec, (0, 0, 0), {(1,): 3}))
        moved = translate_w1(spec, item, (1, 2, -1))
        assert moved.vector.degree == (1, 2, -1)
        assert WedgeSubmodule(spec).contains(moved.vector)
        assert moved.verify(spec, seeds)

    def test_spread(self, omega1_fractional):
        spec = omega1_fractional
        seeds, item = seeded(wedge_at(spec, (0, 0, 0), {(3,): 2}))
        targets = [((1,), (0, 0, 0)), ((2,), (1, 0, 0)), ((3,), (0, 1, 0)), ((1,), (-1, 1, 1))]
        spread = spread_pure_wedge(spec, item, targets)
        checks = tilde_checks(spec)
        assert spread[((1,), (0, 0, 0))].certificate.op == "known"
        for indices, m in targets:
            result = spread[(indices, m)]
            assert result.vector == basis_wedge(spec, indices, m)
            assert result.verify(spec, seeds, checks)


class TestProofReplays:
    def test_non_minuscule(self, sl2_adjoint, sampler):
        seed = GradedVector.homogeneous(3, (0, 0), sampler.vector(3))
        degrees = [(0, 0), (1, -1), (2, 1)]
        replay = replay_non_minuscule(sl2_adjoint, seed, degrees)
        assert replay.ranks(degrees) == {n: 3 for n in degrees}
        assert replay.certified == 9
        assert replay.replay_ok

    def test_minuscule(self, omega1_fractional):
        seed = wedge_at(omega1_fractional, (0, 0, 0), {(2,): 1, (3,): 1})
        degrees = [(0, 0, 0), (1, 0, 0), (0, -1, 1)]
        replay = replay_minuscule(omega1_fractional, seed, degrees)
        assert replay.ranks(degrees) == {n: 3 for n in degrees}
        assert replay.replay_ok


class TestSeeds:
    def test_pole_needs_integral_sigma(self, omega1_fractional):
        box = TruncationBox.around(2, 2, 1)
        with pytest.raises(DomainError):
            seed_vectors(omega1_fractional, SeedKind.RANDOM, SeedPlacement.POLE, box, Sampler(1))

    def test_pole_seeds_whole_fiber(self, omega1_integral):
        box = TruncationBox.around(2, 2, 1)
        seeds = seed_vectors(omega1_integral, SeedKind.RANDOM, SeedPlacement.POLE, box, Sampler(1))
        assert len(seeds) == 3
        assert all(seed.degree == (-1, 0, 0) for seed in seeds)

    def test_kinds(self, omega1_integral):
        box = TruncationBox.around(2, 2, 1)
        inside = seed_vectors(omega1_integral, SeedKind.IN_W, SeedPlacement.CENTER, box, Sampler(1))
        outside = seed_vectors(omega1_integral, SeedKind.OUTSIDE, SeedPlacement.CENTER, box, Sampler(1))
        assert WedgeSubmodule(omega1_integral).contains(inside[0])
        assert not WedgeSubmodule(omega1_integral, tilde=True).contains(outside[0])

    def test_w_seed_needs_wedge_model(self, sl3_adjoint):
        box = TruncationBox.around(2, 2, 1)
        with pytest.raises(DomainError):
            seed_vectors(sl3_adjoint, SeedKind.IN_W, SeedPlacement.CENTER, box, Sampler(1))

    def test_outside_when_tilde_fills_every_fiber(self):
        spec = ModuleSpec.for_wedge(2, 3, (QQ(1, 3), 0, 0))
        box = TruncationBox.around(2, 2, 1)
        with pytest.raises(DomainError):
            seed_vectors(spec, SeedKind.OUTSIDE, SeedPlacement.CENTER, box, Sampler(1))

    def test_outside_gives_up_after_configured_draws(self, omega1_fractional, monkeypatch):
        monkeypatch.setattr(settings, "seed_attempts", 3)
        inside = wedge_vector(omega1_fractional.rep, {(1,): 1})

        class StuckSampler:
            draws = 0

            def vector(self, dim):
                self.draws += 1
                return inside

        sampler = StuckSampler()
        box = TruncationBox.around(2, 2, 1)
        with pytest.raises(DomainError):
            seed_vectors(omega1_fractional, SeedKind.OUTSIDE, SeedPlacement.CENTER, box, sampler)
        assert sampler.draws == 3


class TestClosure:
    def test_sl2_fills_module(self, sl2_adjoint, sampler):
        box = TruncationBox.around(1, 3, 1)
        seeds = [GradedVector.homogeneous(3, (0, 0), sampler.vector(3))]
        report, run = closure(sl2_adjoint, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_MODULE.value
        assert report.passed
        assert all(row.achieved == 3 for row in report.ranks)
        assert run.replay() == (27, True)

    def test_w_seed_fills_known_submodule(self):
        spec = ModuleSpec.for_wedge(1, 1, (QQ(1, 2), 0))
        box = TruncationBox.around(1, 3, 1)
        seeds = seed_vectors(spec, SeedKind.IN_W, SeedPlacement.CENTER, box, Sampler(5))
        report, _ = closure(spec, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_KNOWN_SUBMODULE.value
        assert all(row.achieved == 1 for row in report.ranks)
        assert report.passed

    def test_trivial_label_quotient_pattern(self):
        spec = ModuleSpec.for_wedge(1, 0, (0, 0))
        box = TruncationBox.around(1, 3, 1)
        seeds = [GradedVector.homogeneous(1, (1, 0), [1])]
        report, run = closure(spec, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_QUOTIENT_PATTERN.value
        assert run.rank((0, 0)) == 0
        assert run.rank((-1, 1)) == 1
        assert report.passed

    def test_prediction_needs_wedge_model_for_minuscule(self):
        spec = ModuleSpec.for_label(2, (1, 0), (QQ(1, 3), 0, 0))
        box = TruncationBox.around(2, 1, 1)
        with pytest.raises(DomainError):
            predicted_verdicts(spec, [hw_at(spec, (0, 0, 0))], box)

    def test_engine_validation(self, sl2_adjoint):
        with pytest.raises(DomainError):
            ClosureEngine(sl2_adjoint, TruncationBox.around(2, 2, 1))
        engine = ClosureEngine(sl2_adjoint, TruncationBox.around(1, 1, 1), R=1)
        with pytest.raises(DomainError):
            engine.run([])
        with pytest.raises(DomainError):
            engine.run([hw_at(sl2_adjoint, (3, 0))])

    def test_certificate_file(self, sl2_adjoint):
        box = TruncationBox.around(1, 2, 0)
        report, run = closure(sl2_adjoint, [hw_at(sl2_adjoint, (0, 0))], box, R=2)
        assert report.passed
        replay = certificate_file(run)
        assert list(replay.roots) == ["0,0"]
        assert len(replay.roots["0,0"]) == 3
        assert replay.nodes[0].op == "seed"
        assert all(node.of is None or node.of < node.id for node in replay.nodes)
        assert replay.words["0,0"][0].endswith("seed[0]")

    @pytest.mark.slow
    def test_sl3_adjoint_fills_module(self, sl3_adjoint, sampler):
        box = TruncationBox.around(2, 2, 1)
        seeds = [GradedVector.homogeneous(8, (0, 0, 0), sampler.vector(8))]
        report, _ = closure(sl3_adjoint, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_MODULE.value
        assert report.passed

    @pytest.mark.slow
    def test_omega1_outside_tilde_fills_module(self, omega1_fractional):
        box = TruncationBox.around(2, 2, 1)
        seeds = [wedge_at(omega1_fractional, (0, 0, 0), {(2,): 1})]
        report, _ = closure(omega1_fractional, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_MODULE.value
        assert report.passed

    @pytest.mark.slow
    def test_omega1_pole_fills_tilde(self, omega1_integral):
        box = TruncationBox.around(2, 2, 1)
        seeds = seed_vectors(omega1_integral, SeedKind.RANDOM, SeedPlacement.POLE, box, Sampler(1))
        report, _ = closure(omega1_integral, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_KNOWN_SUBMODULE.value
        assert report.passed

    def test_larger_outer_box_keeps_verdict(self, sl2_adjoint):
        seeds = [GradedVector.homogeneous(3, (0, 0), Sampler(11).vector(3))]
        for outer in (3, 4, 5):
            report, _ = closure(sl2_adjoint, seeds, TruncationBox.around(1, outer, 1), R=2)
            assert report.verdict == Verdict.FILLS_MODULE.value, outer

    @pytest.mark.slow
    @pytest.mark.parametrize("N,lam", NON_MINUSCULE)
    @pytest.mark.parametrize("kind", ["fractional", "integral", "zero"])
    @pytest.mark.parametrize("seed", range(5))
    def test_non_minuscule_random_seed_fills_module(self, N, lam, kind, seed):
        spec = ModuleSpec.for_label(N, lam, SIGMAS[N][kind])
        box = TruncationBox.around(N, 4, 2)
        seeds = seed_vectors(spec, SeedKind.RANDOM, SeedPlacement.CENTER, box, Sampler(seed))
        report, _ = closure(spec, seeds, box, R=2)
        assert report.verdict == Verdict.FILLS_MODULE.value
        assert report.passed

    @pytest.mark.slow
    @pytest.mark.parametrize("N,k", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
    @pytest.mark.parametrize("kind", ["fractional", "integral"])
    def test_w_seed_fills_known_submodule_in_higher_rank(self, N, k, kind):
        spec = ModuleSpec.for_wedge(N, k, SIGMAS[N][kind])
        box = TruncationBox.around(N, 2, 1)
        seeds = seed_vectors(spec, SeedKind.IN_W, SeedPlacement.CENTER, box, Sampler(k))
        report, _ = closure(spec, seeds, box, R=2 if N == 2 else 1)
        assert report.verdict == Verdict.FILLS_KNOWN_SUBMODULE.value
        assert report.passed


class TestRandomizedExtraction:
    def test_last_coordinate_branch(self, sl3_adjoint):
        seeds, item = seeded(hw_at(sl3_adjoint, (0, 0, 2)))
        moved = translate_degree(sl3_adjoint, item, (1, -1, 0))
        assert moved.result.vector == hw_at(sl3_adjoint, (1, -1, 0))
        assert [step.split(":")[0] for step in moved.steps] == ["last", "rest", "last"]
        assert moved.result.verify(sl3_adjoint, seeds)

    def test_integral_sigma_start_at_pole(self):
        spec = ModuleSpec.for_label(2, (1, 1), (1, 0, -1))
        seeds, item = seeded(GradedVector.homogeneous(8, (-1, 0, 1), Sampler(3).vector(8)))
        component = extract_hw_component(spec, item)
        top = extract_hw_vector(spec, component.result)
        assert spec.rep.is_highest_weight_vector(top.result.vector.coefficients)
        moved = translate_degree(spec, top.result, (1, 1, -1))
        assert moved.result.vector == hw_at(spec, (1, 1, -1))
        assert moved.result.verify(spec, seeds)

    @pytest.mark.slow
    @pytest.mark.parametrize("N,lam", NON_MINUSCULE)
    @pytest.mark.parametrize("kind", ["fractional", "integral", "zero"])
    def test_extract_and_translate(self, N, lam, kind):
        spec = ModuleSpec.for_label(N, lam, SIGMAS[N][kind])
        rep = spec.rep
        sampler = Sampler(1000 * N + 10 * sum(lam) + len(kind))
        for n, m in random_inputs(spec, sampler):
            seeds, item = seeded(GradedVector.homogeneous(spec.dim, n, sampler.vector(spec.dim)))
            component = extract_hw_component(spec, item)
            top = extract_hw_vector(spec, component.result)
            coeffs = top.result.vector.coefficients
            assert rep.is_highest_weight_vector(coeffs)
            assert coeffs[rep.hw_index]
            moved = translate_degree(spec, top.result, m)
            assert moved.result.vector == hw_at(spec, m)
            for result in (component.result, top.result, moved.result):
                assert result.verify(spec, seeds), (n, m)

    @pytest.mark.slow
    @pytest.mark.parametrize("N,k", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)])
    @pytest.mark.parametrize("integral", [False, True])
    def test_wedge_weight_vectors(self, N, k, integral):
        sigma = (1 if integral else QQ(1, 2),) + (0,) * N
        spec = ModuleSpec.for_wedge(N, k, sigma)
        tilde = WedgeSubmodule(spec, tilde=True)
        checks = tilde_checks(spec)
        sampler = Sampler(100 * N + 10 * k + integral)
        found = 0
        while found < 20:
            w = GradedVector.homogeneous(spec.dim, sampler.degree(N + 1, 2), sampler.vector(spec.dim))
            if tilde.contains(w):
                continue
            found += 1
            seeds, item = seeded(w)
            reduction = wedge_weight_vector(spec, item)
            assert pure_wedge(spec, reduction.result.vector) is not None
            assert reduction.result.verify(spec, seeds, checks), w.degree


class TestTopWedge:
    def test_rejects_other_wedges(self, omega1_fractional):
        _, item = seeded(wedge_at(omega1_fractional, (0, 0, 0), {(2,): 1}))
        with pytest.raises(DomainError):
            translate_top_wedge(omega1_fractional, item, (1, 0, 0))

    def test_class(self):
        spec = ModuleSpec.for_wedge(3, 3, (QQ(1, 2), 0, 0, 0))
        coefficients = wedge_vector(spec.rep, {(2, 3, 4): 1, (1, 2, 3): 2})
        assert top_class(spec, (0, 0, 0, 0), coefficients) == QQ(1, 2)
        assert top_class(spec, (0, 0, 0, 1), coefficients) == QQ(1, 2) - 2

    def test_class_in_tilde_rejected(self):
        spec = ModuleSpec.for_wedge(3, 3, (QQ(1, 2), 0, 0, 0))
        _, item = seeded(wedge_at(spec, (0, 0, 0, 0), {(1, 2, 3): 1}))
        with pytest.raises(DomainError):
            translate_top_wedge(spec, item, (1, 0, 0, 0))

    @pytest.mark.parametrize(
        "target",
        [(2, 0, 0, 0), (-1, 0, 0, 0), (1, 1, 0, -1), (0, 1, -1, 2), (0, 0, 0, 0)],
    )
    def test_translate_fractional(self, target):
        spec = ModuleSpec.for_wedge(3, 3, (QQ(1, 2), 0, 0, 0))
        seeds, item = seeded(wedge_at(spec, (0, 0, 0, 0), {(2, 3, 4): 1, (1, 2, 3): 2}))
        moved = translate_top_wedge(spec, item, target)
        assert moved.vector == basis_wedge(spec, (2, 3, 4), target)
        assert moved.verify(spec, seeds, tilde_checks(spec))

    def test_translate_integral(self):
        spec = ModuleSpec.for_wedge(3, 3, (1, 0, 0, 0))
        seeds, item = seeded(wedge_at(spec, (0, 0, 0, 0), {(2, 3, 4): 3}))
        moved = translate_top_wedge(spec, item, (1, 0, 0, 0))
        assert moved.vector == basis_wedge(spec, (2, 3, 4), (1, 0, 0, 0))
        assert moved.verify(spec, seeds, tilde_checks(spec))
        with pytest.raises(DomainError):
            translate_top_wedge(spec, item, (-1, 0, 0, 0))

    def test_rank_one(self):
        spec = ModuleSpec.for_wedge(1, 1, (QQ(1, 2), 0))
        seeds, item = seeded(wedge_at(spec, (0, 0), {(2,): 1}))
        for target in [(3, 0), (-1, 0), (0, 2), (2, -2)]:
            moved = translate_top_wedge(spec, item, target)
            assert moved.vector.degree == target
            assert top_class(spec, target, moved.vector.coefficients) != 0
            assert moved.verify(spec, seeds, tilde_checks(spec))


class TestTopAndTrivialReplays:
    @pytest.mark.parametrize("kind", ["fractional", "integral"])
    def test_top_wedge_rank_three(self, kind):
        spec = ModuleSpec.for_wedge(3, 3, SIGMAS[3][kind])
        seed = wedge_at(spec, (0, 0, 0, 0), {(2, 3, 4): 1, (1, 2, 3): 2})
        degrees = [(0, 0, 0, 0), (2, 0, 0, 0), (1, 1, 0, -1), (0, 1, -1, 2), (-1, 0, 0, 0)]
        replay = replay_minuscule(spec, seed, degrees)
        assert replay.ranks(degrees) == {n: 4 for n in degrees}
        assert replay.certified == (5 if kind == "fractional" else 4)
        assert replay.replay_ok

    def test_top_wedge_rank_one(self):
        spec = ModuleSpec.for_wedge(1, 1, (1, 0))
        seed = wedge_at(spec, (0, 0), {(1,): 1, (2,): 1})
        degrees = [(0, 0), (1, 0), (0, 3), (-1, 0), (2, -2)]
        replay = replay_minuscule(spec, seed, degrees)
        assert replay.ranks(degrees) == {n: 2 for n in degrees}
        assert replay.replay_ok

    def test_trivial_label(self):
        spec = ModuleSpec.for_wedge(2, 0, (1, 0, 0))
        seed = GradedVector.homogeneous(1, (0, 0, 0), [3])
        degrees = [(0, 0, 0), (1, -1, 2), (2, 0, 0), (-1, 0, 0)]
        replay = replay_minuscule(spec, seed, degrees)
        assert replay.ranks(degrees) == {n: 1 for n in degrees}
        assert replay.certified == 3
        assert replay.replay_ok

    def test_trivial_label_fractional(self):
        spec = ModuleSpec.for_wedge(3, 0, (QQ(1, 2), 0, QQ(1, 3), 0))
        seed = GradedVector.homogeneous(1, (1, 0, 0, 0), [2])
        degrees = [(0, 0, 0, 0), (1, 2, -1, 0), (-2, 0, 1, 1)]
        replay = replay_minuscule(spec, seed, degrees)
        assert replay.ranks(degrees) == {n: 1 for n in degrees}
        assert replay.replay_ok

    def test_trivial_seed_at_degenerate_degree(self):
        spec = ModuleSpec.for_wedge(2, 0, (1, 0, 0))
        seed = GradedVector.homogeneous(1, (-1, 0, 0), [1])
        with pytest.raises(DomainError):
            replay_minuscule(spec, seed, [(0, 0, 0)])

    def test_wedge_degree_out_of_range(self):
        spec = ModuleSpec.for_wedge(2, 3, (QQ(1, 3), 0, 0))
        seed = GradedVector.homogeneous(1, (0, 0, 0), [1])
        with pytest.raises(DomainError):
            replay_minuscule(spec, seed, [(0, 0, 0)])

    @pytest.mark.slow
    @pytest.mark.parametrize("N", [1, 2, 3])
    @pytest.mark.parametrize("kind", ["fractional", "integral"])
    def test_random_top_wedge_replays(self, N, kind):
        spec = ModuleSpec.for_wedge(N, N, SIGMAS[N][kind])
        tilde = WedgeSubmodule(spec, tilde=True)
        sampler = Sampler(7 * N + len(kind))
        done = 0
        while done < 20:
            seed = GradedVector.homogeneous(spec.dim, sampler.degree(N + 1, 2), sampler.vector(spec.dim))
            if tilde.contains(seed):
                continue
            done += 1
            degrees = [sampler.degree(N + 1, 2) for _ in range(3)]
            replay = replay_minuscule(spec, seed, degrees)
            assert replay.ranks(degrees) == {n: spec.dim for n in set(degrees)}
            assert replay.replay_ok, seed.degree
