import pytest

from gclt.config import (
    BOUND_ENV_VAR,
    DEFAULT_ENUMERATION_BOUND,
    bound_override,
    check_order,
    enumeration_bound,
    resolve_bound,
)
from gclt.errors import BoundExceededError


def test_default_bound():
    assert enumeration_bound() == DEFAULT_ENUMERATION_BOUND
    assert resolve_bound() == DEFAULT_ENUMERATION_BOUND


def test_flag_wins_over_environment(monkeypatch):
    monkeypatch.setenv(BOUND_ENV_VAR, "600")
    assert resolve_bound() == 600
    assert resolve_bound(900) == 900


def test_small_override_ignored(monkeypatch):
    monkeypatch.setenv(BOUND_ENV_VAR, "50")
    assert resolve_bound() == DEFAULT_ENUMERATION_BOUND
    assert resolve_bound(10) == DEFAULT_ENUMERATION_BOUND


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv(BOUND_ENV_VAR, "lots")
    with pytest.raises(ValueError, match=BOUND_ENV_VAR):
        resolve_bound()


def test_bound_override_is_scoped():
    with bound_override(800) as bound:
        assert bound == enumeration_bound() == 800
        check_order(700)
    assert enumeration_bound() == DEFAULT_ENUMERATION_BOUND
    with pytest.raises(BoundExceededError) as info:
        check_order(700)
    assert info.value.bound == DEFAULT_ENUMERATION_BOUND
