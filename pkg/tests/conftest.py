from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from app.config import reset
from app.io.model_file import load_game, load_model
from app.net.network import Network

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

hypothesis_settings.register_profile(
    "netconsent", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
hypothesis_settings.load_profile("netconsent")

_ENV = (
    "NETCONSENT_MAX_PLAYERS", "NETCONSENT_MAX_PROFILE_PLAYERS", "NETCONSENT_MAX_ONE_SIDED_PLAYERS",
    "NETCONSENT_MAX_MONADIC_PLAYERS", "NETCONSENT_MAX_PROFILES", "NETCONSENT_MAX_COALITION_WORK",
    "NETCONSENT_PRECISION", "NETCONSENT_JOBS", "NETCONSENT_SEED", "LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in _ENV:
        monkeypatch.delenv(name, raising=False)
    reset()
    yield
    reset()


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def model():
    return lambda name: load_model(FIXTURES / f"{name}.json")


@pytest.fixture
def chicken():
    return load_game(FIXTURES / "chicken.json")


@pytest.fixture
def net():
    """``net(3, "12,13")``."""
    return Network.parse


@pytest.fixture
def keys():
    return lambda networks: [g.key() for g in networks]
