import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings
from sympy.polys.domains import QQ
from src.modules import ModuleSpec
from src.utils import Sampler

hypothesis_settings.register_profile(
    "exact",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("exact")


@pytest.fixture
def sampler():
    return Sampler(20240601)


@pytest.fixture
def sl2_adjoint():
    """F^sigma((2)) for sl_2 with sigma = (1/2, 0)."""
    return ModuleSpec.for_label(1, (2,), (QQ(1, 2), 0))


@pytest.fixture
def sl3_adjoint():
    """F^sigma((1,1)) for sl_3 with sigma = (1/3, 0, 0)."""
    return ModuleSpec.for_label(2, (1, 1), (QQ(1, 3), 0, 0))


@pytest.fixture
def omega1_fractional():
    """F^sigma(omega_1), N = 2, sigma = (1/3, 0, 0)."""
    return ModuleSpec.for_wedge(2, 1, (QQ(1, 3), 0, 0))


@pytest.fixture
def omega1_integral():
    """F^sigma(omega_1), N = 2, sigma = (1, 0, 0); the degenerate degree is (-1, 0, 0)."""
    return ModuleSpec.for_wedge(2, 1, (1, 0, 0))
