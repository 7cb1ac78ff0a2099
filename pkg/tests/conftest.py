"""Pytest configuration and fixtures."""
import pytest

from config.settings import Settings, settings
from tests.fixtures.plans import PLAN_STEPS, named_plan


@pytest.fixture(scope="session")
def plans():
    """Every named plan, built once."""
    return {name: named_plan(name) for name in PLAN_STEPS}


@pytest.fixture
def test_settings():
    """Test settings override."""
    return settings


@pytest.fixture
def isolated_settings(monkeypatch):
    """Settings that ignore ANTICANON_* variables from the environment."""
    for name in ("ANTICANON_SEED", "ANTICANON_SAMPLES", "ANTICANON_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    return Settings(_env_file=None)
