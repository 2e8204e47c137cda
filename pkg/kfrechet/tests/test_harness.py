"""Checks on the harness itself, so a broken fixture or setting fails here and not everywhere."""

import pytest

from kfrechet.cli import build_parser
from kfrechet.core.settings import Settings, SettingsError, get_settings
from kfrechet.enums import Algorithm, Axis


def test_settings_defaults() -> None:
    settings = get_settings()
    assert settings.tol == 1e-9
    assert settings.log_level == "WARNING"
    assert settings.pixel_resolution == 512


def test_tolerance_comes_from_the_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("KFRECHET_TOL", "1e-6")
    get_settings.cache_clear()
    assert get_settings().tol == 1e-6


def test_log_level_is_case_insensitive(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("KFRECHET_LOG_LEVEL", " debug ")
    get_settings.cache_clear()
    assert get_settings().log_level == "DEBUG"


@pytest.mark.parametrize("value", ["-1", "nan", "abc"])
def test_bad_tolerance_is_a_settings_error(monkeypatch: pytest.MonkeyPatch, value: str) -> None:
    monkeypatch.setenv("KFRECHET_TOL", value)
    get_settings.cache_clear()
    with pytest.raises(SettingsError, match="tol"):
        get_settings()


def test_previous_override_did_not_leak() -> None:
    assert get_settings().tol == Settings.model_fields["tol"].default


def test_every_subcommand_has_a_handler() -> None:
    parser = build_parser()
    for command in ("decide", "minimize-k", "minimize-eps", "freespace-svg", "boxgen", "boxsolve"):
        args = parser.parse_args([command, *_required_flags(command)])
        assert callable(args.func), f"{command} has no handler"


def test_enum_values_are_lowercase_names() -> None:
    # The CLI parses --algo and friends by value.
    for member in (*Algorithm, *Axis):
        assert member.value == member.name.lower()


def _required_flags(command: str) -> list[str]:
    curves = ["--p", "p.txt", "--q", "q.txt"]
    match command:
        case "decide":
            return [*curves, "--eps", "1", "--k", "1"]
        case "minimize-k":
            return [*curves, "--eps", "1"]
        case "minimize-eps":
            return [*curves, "--k", "1"]
        case "freespace-svg":
            return [*curves, "--eps", "1", "--out", "fs.svg"]
        case "boxgen":
            return ["--cnf", "f.cnf", "--out", "b.json"]
        case _:
            return ["--in", "b.json"]
