import pytest

from ih_calculator import config as ih_config
from ih_calculator.laurent import LaurentPoly
from ih_calculator.twostrata import build


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: exhaustive sweeps (deselect with -m 'not slow')")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Drop cached settings so each test sees its own IH_* environment."""
    monkeypatch.setattr(ih_config, "_CURRENT_SETTINGS", None)
    yield
    monkeypatch.setattr(ih_config, "_CURRENT_SETTINGS", None)


def quadric_fiber_data(genus: int, b4: int):
    """n=4, m=1, p=2, q=1 data of a hypersurface singular along a genus-``genus`` curve."""
    return build(
        n=4,
        m=1,
        p=2,
        q=1,
        fiber=(1, 0, 2, 0, 1),
        h_resolution=LaurentPoly.from_coefficients([1, 0, 3, 4 * genus, b4, 4 * genus, 3, 0, 1]),
        h_delta=LaurentPoly({0: 1, 1: 2 * genus, 2: 1}),
    )


@pytest.fixture
def genus0_data():
    return quadric_fiber_data(genus=0, b4=4)


@pytest.fixture
def genus1_data():
    return quadric_fiber_data(genus=1, b4=15)
