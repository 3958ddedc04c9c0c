import pytest

from scgraph.config import (DEFAULT_ENUM_MAX_N, DEFAULT_SKEW_MAX_N, DEFAULT_SYMMETRIC_MAX_N, Guards,
                            check_guard)
from scgraph.errors import ConfigError, GuardExceededError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv('SCGRAPH_MAX_N', raising=False)
    monkeypatch.delenv('SCGRAPH_ENUM_MAX_N', raising=False)


def test_defaults():
    guards = Guards.from_env()
    assert guards == Guards()
    assert (guards.enum_max_n, guards.skew_max_n, guards.symmetric_max_n) == \
        (DEFAULT_ENUM_MAX_N, DEFAULT_SKEW_MAX_N, DEFAULT_SYMMETRIC_MAX_N) == (13, 24, 20)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv('SCGRAPH_MAX_N', '10')
    monkeypatch.setenv('SCGRAPH_ENUM_MAX_N', '9')
    assert Guards.from_env() == Guards(enum_max_n=9, skew_max_n=10, symmetric_max_n=10)


@pytest.mark.parametrize('raw', ['0', '-3', 'ten', '1.5'])
def test_bad_environment_values(monkeypatch, raw):
    monkeypatch.setenv('SCGRAPH_MAX_N', raw)
    with pytest.raises(ConfigError):
        Guards.from_env()


def test_guards_must_be_positive():
    with pytest.raises(ConfigError):
        Guards(skew_max_n=0)


def test_check_guard():
    check_guard(13, 13, "enum")
    check_guard(100, None, "enum")
    with pytest.raises(GuardExceededError, match="n=14 exceeds the guard of 13"):
        check_guard(14, 13, "enum")
