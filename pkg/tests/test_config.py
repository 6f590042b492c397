import logging

import pytest

from app.config import DEFAULTS, configure, reset, settings


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("NETCONSENT_MAX_PLAYERS", "5")
    monkeypatch.setenv("NETCONSENT_SEED", "not-a-number")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    reset()
    s = settings()
    assert s.max_players == 5
    assert s.seed == DEFAULTS.seed
    assert s.log_level == "DEBUG"


def test_configure_ignores_none_and_warns_on_raised_caps(caplog):
    with caplog.at_level(logging.WARNING, logger="app.config"):
        s = configure(max_players=8, jobs=None)
    assert s.max_players == 8
    assert s.jobs == DEFAULTS.jobs
    assert "max_players raised to 8" in caplog.text


def test_unknown_setting():
    with pytest.raises(TypeError):
        configure(colour="blue")
