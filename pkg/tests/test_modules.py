from itertools import product
import pytest
from hypothesis import given, strategies as st
from sympy.polys.domains import QQ
from src.config import settings
from src.fields import VectorField, random_divergence_free_field
from src.modules import (
    GradedSubspace,
    GradedVector,
    ModuleSpec,
    WedgeSubmodule,
    act,
    act_word,
    derham_degree_check,
    elementary_symmetric,
    expected_product,
    operator_product_trick,
    product_shifts,
    psi,
    psi_target,
    quotient_piece,
    root_field,
)
from src.representations import wedge_vector
from src.utils import DomainError, Sampler
from src.utils.linalg import unit_vector

seeds = st.integers(min_value=0, max_value=2**32)


def random_vector(spec, sampler, radius=2):
    n = sampler.degree(spec.N + 1, radius)
    return GradedVector.homogeneous(spec.dim, n, sampler.vector(spec.dim))


class TestGradedVector:
    def test_zero_parts_dropped(self):
        w = GradedVector.from_mapping(2, {(0, 0): [0, 0], (1, 0): [1, 0]})
        assert w.degrees == [(1, 0)]
        assert w.is_homogeneous()
        assert w.degree == (1, 0)

    def test_arithmetic(self):
        a = GradedVector.homogeneous(2, (0, 0), [1, 2])
        b = GradedVector.homogeneous(2, (1, 0), [0, 1])
        total = a + b
        assert total.degrees == [(0, 0), (1, 0)]
        assert (total - b) == a
        assert (a - a).is_zero()
        assert a.scaled(QQ(1, 2)).coefficients == (QQ(1, 2), QQ(1))
        with pytest.raises(DomainError):
            total.degree

    def test_json(self):
        w = GradedVector.homogeneous(2, (0, -1), [QQ(1, 3), 0])
        assert w.to_json() == [{"n": [0, -1], "coeffs": ["1/3", "0"]}]
        assert GradedVector.from_json(2, w.to_json()) == w

    def test_dim_mismatch(self):
        with pytest.raises(DomainError):
            GradedVector.homogeneous(2, (0, 0), [1, 2, 3])


class TestModuleSpec:
    def test_basics(self, sl3_adjoint):
        assert sl3_adjoint.dim == 8
        assert sl3_adjoint.degenerate_degree is None
        assert sl3_adjoint.wedge_degree is None
        assert sl3_adjoint.shifted((1, 0, 0)) == (QQ(4, 3), QQ(0), QQ(0))

    def test_integral_sigma(self, omega1_integral):
        assert omega1_integral.degenerate_degree == (-1, 0, 0)
        assert omega1_integral.wedge_degree == 1

    def test_operator_is_traceless(self, sl3_adjoint):
        f = VectorField.of([1, 1, -2], [1, 1, 1])
        assert sl3_adjoint.operator_trace(f) == 0

    def test_rejects_bad_fields(self, sl3_adjoint):
        w = GradedVector.homogeneous(8, (0, 0, 0), unit_vector(8, 0))
        with pytest.raises(DomainError):
            act(sl3_adjoint, VectorField.of([1, 0, 0], [1, 0, 0]), w)
        with pytest.raises(DomainError):
            act(sl3_adjoint, VectorField.of([1, -1], [1, 1]), w)

    def test_sigma_length(self):
        with pytest.raises(DomainError):
            ModuleSpec.for_label(1, (2,), (0, 0, 0))

    def test_operator_cache_is_bounded(self, monkeypatch):
        monkeypatch.setattr(settings, "operator_cache_size", 2)
        spec = ModuleSpec.for_label(1, (2,), (QQ(1, 2), 0))
        for r in ([1, 1], [2, 2], [1, 1], [3, 3]):
            spec.field_operator(VectorField.of([1, -1], r))
        info = spec.cache_info()
        assert (info.maxsize, info.currsize, info.hits, info.misses) == (2, 2, 1, 3)
        spec.operator_rows(VectorField.of([1, -1], [4, 4]))
        assert spec.cache_info().currsize == 2


class TestAction:
    def test_cartan_acts_by_pairing(self, sl2_adjoint):
        w = GradedVector.homogeneous(3, (2, -1), [1, 1, 1])
        image = act(sl2_adjoint, VectorField.cartan(1, 1), w)
        assert image == w.scaled(QQ(5, 2))

    def test_root_field_on_highest_weight(self, sl2_adjoint):
        rep = sl2_adjoint.rep
        v = GradedVector.homogeneous(3, (0, 0), unit_vector(3, rep.hw_index))
        # D(e_1, e_2) v(0) = (e_1|sigma) v(e_2) + E_21 v(e_2)
        image = act(sl2_adjoint, root_field(sl2_adjoint, 1, 2, 1), v)
        expected = [QQ(1, 2) * x + y for x, y in zip(v.coefficients, rep.apply(2, 1, v.coefficients))]
        assert image == GradedVector.homogeneous(3, (0, 1), expected)

    @given(seeds)
    def test_module_axiom(self, seed):
        spec = ModuleSpec.for_label(2, (1, 1), (QQ(1, 3), 0, 0))
        sampler = Sampler(seed)
        f = random_divergence_free_field(sampler, 2, 2)
        g = random_divergence_free_field(sampler, 2, 2)
        w = random_vector(spec, sampler)
        assert act(spec, f.bracket(g), w) == act(spec, f, act(spec, g, w)) - act(spec, g, act(spec, f, w))

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "N,lam,sigma",
        [(1, (2,), (QQ(1, 2), 0)), (2, (1, 1), (QQ(1, 3), 0, 0)), (2, (1, 0), (0, 0, 0))],
    )
    def test_module_axiom_acceptance(self, N, lam, sigma):
        spec = ModuleSpec.for_label(N, lam, sigma)
        sampler = Sampler(7)
        for _ in range(100):
            f = random_divergence_free_field(sampler, N, 2)
            g = random_divergence_free_field(sampler, N, 2)
            w = random_vector(spec, sampler)
            assert act(spec, f.bracket(g), w) == act(spec, f, act(spec, g, w)) - act(spec, g, act(spec, f, w))

    def test_elementary_symmetric(self):
        assert elementary_symmetric([1, 1, -2], 1) == 0
        assert elementary_symmetric([1, 1, -2], 2) == -3
        assert elementary_symmetric([1, 1, -2], 3) == -2
        assert product_shifts(3) == (1, 1, -2)

    @pytest.mark.parametrize("k", [2, 3])
    def test_operator_product_trick(self, sl3_adjoint, sampler, k):
        w = random_vector(sl3_adjoint, sampler)
        shifts = product_shifts(k)
        got = operator_product_trick(sl3_adjoint, 3, 1, k, w)
        assert got == expected_product(sl3_adjoint, 3, 1, shifts, w)
        assert got.degree == w.degree

    def test_operator_product_validation(self, sl3_adjoint, sampler):
        w = random_vector(sl3_adjoint, sampler)
        with pytest.raises(DomainError):
            operator_product_trick(sl3_adjoint, 1, 1, 2, w)
        with pytest.raises(DomainError):
            operator_product_trick(sl3_adjoint, 3, 1, 2, w, shifts=(1, 1))

    def test_word_order(self, sl2_adjoint):
        w = GradedVector.homogeneous(3, (0, 0), [1, 0, 0])
        f = root_field(sl2_adjoint, 1, 2, 1)
        g = VectorField.cartan(1, 2)
        assert act_word(sl2_adjoint, [f, g], w) == act(sl2_adjoint, g, act(sl2_adjoint, f, w))


class TestGradedSubspace:
    def test_insert_splits_degrees(self):
        space = GradedSubspace(2)
        w = GradedVector.from_mapping(2, {(0, 0): [1, 0], (1, 0): [0, 1]})
        assert space.insert(w)
        assert not space.insert(w)
        assert space.rank((0, 0)) == 1 and space.rank((1, 0)) == 1
        assert space.contains(GradedVector.homogeneous(2, (1, 0), [0, 5]))
        assert space.ranks([(0, 0), (2, 2)]) == {(0, 0): 1, (2, 2): 0}


class TestWedgeSubmodules:
    def test_piece_ranks(self, omega1_fractional):
        W = WedgeSubmodule(omega1_fractional)
        assert W.piece((0, 0, 0)).rank == 1
        assert W.piece((0, 0, 0)).contains(wedge_vector(omega1_fractional.rep, {(1,): 1}))
        assert W.expected_rank((2, 1, 0)) == 1

    def test_tilde_adds_the_degenerate_fiber(self, omega1_integral):
        W = WedgeSubmodule(omega1_integral)
        tilde = WedgeSubmodule(omega1_integral, tilde=True)
        assert W.piece((-1, 0, 0)).rank == 0
        assert tilde.piece((-1, 0, 0)).rank == 3
        assert tilde.piece((0, 0, 0)) == W.piece((0, 0, 0))

    def test_invariance(self, omega1_integral):
        from src.fields import generators

        fields = generators(2, 1)
        degrees = list(product(range(-2, 1), range(-1, 2), range(-1, 1)))
        for tilde in (False, True):
            submodule = WedgeSubmodule(omega1_integral, tilde=tilde)
            assert submodule.invariance_failures(fields, degrees) == []

    def test_requires_wedge_model(self, sl3_adjoint):
        with pytest.raises(DomainError):
            WedgeSubmodule(sl3_adjoint)


class TestDerham:
    def test_fractional_sigma(self):
        for k in range(3):
            spec = ModuleSpec.for_wedge(2, k, (QQ(1, 3), 0, 0))
            for n in product(range(-1, 2), repeat=3):
                check = derham_degree_check(spec, n)
                assert check.passed, (k, n)

    @pytest.mark.parametrize("sigma", [(QQ(1, 2), 0, QQ(-1, 3), 0), (1, 0, 0, -1)])
    def test_rank_three(self, sigma):
        for k in range(4):
            spec = ModuleSpec.for_wedge(3, k, sigma)
            for n in product(range(-1, 2), repeat=4):
                check = derham_degree_check(spec, n)
                assert check.passed, (k, n)
                if tuple(n) == spec.degenerate_degree:
                    assert check.kernel_rank == spec.dim

    def test_rank_table(self):
        spec = ModuleSpec.for_wedge(2, 1, (QQ(1, 3), 0, 0))
        check = derham_degree_check(spec, (0, 0, 0))
        assert (check.kernel_rank, check.image_rank, check.quotient_dim) == (1, 2, 2)

    def test_enlarged_kernel_at_zero(self):
        spec = ModuleSpec.for_wedge(2, 1, (0, 0, 0))
        check = derham_degree_check(spec, (0, 0, 0))
        assert check.passed
        assert check.kernel_rank == 3
        assert check.image_rank == 0
        assert check.quotient_dim == 0

    @pytest.mark.parametrize("N", [2, 3])
    def test_quotient_dimensions(self, N):
        from math import comb

        sigma = [1] + [0] * N
        for k in range(1, N + 1):
            spec = ModuleSpec.for_wedge(N, k, sigma)
            assert len(quotient_piece(spec, [0] * (N + 1))) == comb(N + 1, k) - comb(N, k - 1)
            assert len(quotient_piece(spec, spec.degenerate_degree)) == 0

    def test_composition_vanishes(self, sampler):
        spec = ModuleSpec.for_wedge(3, 1, (QQ(1, 2), 0, 0, QQ(-1, 3)))
        middle = psi_target(spec)
        w = random_vector(spec, sampler)
        assert psi(middle, psi(spec, w)).is_zero()

    def test_psi_range(self):
        spec = ModuleSpec.for_wedge(2, 3, (0, 0, 0))
        with pytest.raises(DomainError):
            psi_target(spec)
