import pytest

from tamewild.algebra.context import XYZ, Z2
from tamewild.core.settings import override_settings


@pytest.fixture(autouse=True)
def _fresh_settings():
    # CLI runs store per-run overrides; drop them between tests
    override_settings()
    yield
    override_settings()


@pytest.fixture
def xyz():
    return XYZ


@pytest.fixture
def z2():
    return Z2
