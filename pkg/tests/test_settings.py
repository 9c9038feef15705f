from fractions import Fraction

import pytest
from pydantic import ValidationError

from tamewild.core.errors import (
    NotInvertible,
    ParseError,
    ResourceLimit,
    ShapeViolation,
    TameWildError,
    UnknownVariable,
    error_body,
    exit_code_for,
)
from tamewild.core.settings import Settings, get_settings, override_settings


def test_defaults():
    settings = get_settings()
    assert settings.MAX_DEGREE == 8
    assert settings.variables == ("x", "y", "z")
    assert settings.z_variables == ("z1", "z2")
    assert settings.translation_offsets == [(1, 0), (0, 1), (1, 1)]


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MAX_DEGREE", "12")
    monkeypatch.setenv("TRANSLATION_OFFSETS", "1/2,0; 0,-3")
    settings = override_settings()
    assert settings.MAX_DEGREE == 12
    assert settings.translation_offsets == [(Fraction(1, 2), 0), (0, -3)]


def test_cli_overrides_win_and_reset(monkeypatch):
    monkeypatch.setenv("MAX_DEGREE", "12")
    assert override_settings(MAX_DEGREE=5).MAX_DEGREE == 5
    assert override_settings().MAX_DEGREE == 12


@pytest.mark.parametrize("fields", [{"MAX_DEGREE": 0}, {"TRANSLATION_OFFSETS": "1,2,3"}, {"APP_ENV": "staging"}])
def test_invalid_settings(fields):
    with pytest.raises(ValidationError):
        Settings(**fields)


def test_log_level_mapping():
    assert Settings(LOG_LEVEL="debug").log_level_numeric == 10
    assert Settings(LOG_LEVEL="nonsense").log_level_numeric == 20


@pytest.mark.parametrize(
    "exc, code",
    [
        (ParseError("bad"), 2),
        (UnknownVariable(), 2),
        (NotInvertible(), 2),
        (ResourceLimit(), 3),
        (ShapeViolation(), 4),
        (RuntimeError("boom"), 4),
    ],
)
def test_exit_codes(exc, code):
    assert exit_code_for(exc) == code


def test_error_body():
    body = error_body(ParseError("unexpected token", position=(2, 3)), "run-1")
    assert body["code"] == "ParseError"
    assert body["classification"] == "parse_error"
    assert body["position"] == [2, 3]
    assert body["message"] == "unexpected token at column 3"
    assert body["run_id"] == "run-1"
    internal = error_body(RuntimeError("boom"), None)
    assert internal["code"] == "InternalError"
    assert internal["classification"] == "internal_error"
    assert TameWildError().detail == "Invalid input"
