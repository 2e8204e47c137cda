"""End-to-end runs of the command line through `main`."""

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from kfrechet.cli import main
from kfrechet.cli.svg import component_colors
from kfrechet.constants import (
    COMPONENT_PALETTE,
    EXIT_ERROR,
    EXIT_NO,
    EXIT_YES,
    SELECTED_STROKE,
)
from kfrechet.schemas import PolyCurve

WriteCurve = Callable[[str, PolyCurve], Path]


def _report(capsys: pytest.CaptureFixture[str]) -> dict[str, Any]:
    out: dict[str, Any] = json.loads(capsys.readouterr().out)
    return out


@pytest.fixture
def curve_args(write_curve: WriteCurve, unit_p: PolyCurve, unit_q: PolyCurve) -> list[str]:
    return ["--p", str(write_curve("p.txt", unit_p)), "--q", str(write_curve("q.txt", unit_q))]


@pytest.fixture
def hooks_args(write_curve: WriteCurve, hooks: tuple[PolyCurve, PolyCurve]) -> list[str]:
    p, q = hooks
    return ["--p", str(write_curve("p.txt", p)), "--q", str(write_curve("q.txt", q))]


def test_decide_yes(curve_args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decide", *curve_args, "--eps", "1", "--k", "1"]) == EXIT_YES
    assert _report(capsys) == {"answer": True, "components": 1, "selection": [0], "z": 1}


def test_decide_no(curve_args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decide", *curve_args, "--eps", "0.5", "--k", "3"]) == EXIT_NO
    assert _report(capsys) == {"answer": False, "components": 0, "selection": None, "z": 0}


@pytest.mark.parametrize("algo", ["fpt", "brute", "approx", "hausdorff"])
def test_decide_hooks(
    hooks_args: list[str], capsys: pytest.CaptureFixture[str], algo: str
) -> None:
    assert main(["decide", *hooks_args, "--eps", "0.6", "--k", "2", "--algo", algo]) == EXIT_YES
    assert _report(capsys)["selection"] == [0, 1]


def test_decide_weak_on_the_hooks(
    hooks_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["decide", *hooks_args, "--eps", "0.6", "--k", "1", "--algo", "weak"]) == EXIT_NO
    assert _report(capsys)["components"] == 2


def test_missing_curve_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    missing = str(tmp_path / "missing.txt")
    status = main(["decide", "--p", missing, "--q", missing, "--eps", "1", "--k", "1"])
    assert status == EXIT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "kfrechet decide:" in captured.err


def test_malformed_curve_file(
    tmp_path: Path, curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n", encoding="utf-8")
    status = main(["decide", "--p", str(bad), *curve_args[2:], "--eps", "1", "--k", "1"])
    assert status == EXIT_ERROR
    assert "kfrechet decide:" in capsys.readouterr().err


def test_negative_k(curve_args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decide", *curve_args, "--eps", "1", "--k", "-1"]) == EXIT_ERROR
    assert "non-negative" in capsys.readouterr().err


@pytest.mark.parametrize(
    "extra",
    [
        ["--k", "1"],
        ["--eps", "nan", "--k", "1"],
        ["--eps", "1", "--k", "1", "--algo", "magic"],
    ],
)
def test_rejected_arguments(curve_args: list[str], extra: list[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["decide", *curve_args, *extra])
    assert excinfo.value.code == EXIT_ERROR


def test_bad_environment(
    curve_args: list[str], capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setenv("KFRECHET_TOL", "abc")
    assert main(["decide", *curve_args, "--eps", "1", "--k", "1"]) == EXIT_ERROR
    assert "tol" in capsys.readouterr().err


def test_minimize_k(hooks_args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["minimize-k", *hooks_args, "--eps", "0.6"]) == EXIT_YES
    report = _report(capsys)
    assert (report["k"], report["selection"], report["components"]) == (2, [0, 1], 2)


def test_minimize_k_without_cover(
    curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["minimize-k", *curve_args, "--eps", "0.5", "--method", "approx"]) == EXIT_NO
    assert _report(capsys)["k"] is None


def test_minimize_eps(curve_args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["minimize-eps", *curve_args, "--k", "1", "--tol", "1e-6"]) == EXIT_YES
    report = _report(capsys)
    assert report["epsilon"] == pytest.approx(1.0, abs=1e-6)
    assert report["selection"] == [0]


def test_minimize_eps_over_candidates(
    curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["minimize-eps", *curve_args, "--k", "1", "--mode", "candidates"]) == EXIT_YES
    assert _report(capsys)["epsilon"] == 1.0


def test_minimize_eps_needs_positive_k(
    curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["minimize-eps", *curve_args, "--k", "0"]) == EXIT_ERROR
    assert "kfrechet minimize-eps:" in capsys.readouterr().err


def test_freespace_svg(
    tmp_path: Path, curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    out = tmp_path / "fs.svg"
    assert main(["freespace-svg", *curve_args, "--eps", "1", "--out", str(out)]) == EXIT_YES
    assert _report(capsys) == {"components": 1, "out": str(out)}
    svg = out.read_text(encoding="utf-8")
    assert 'data-components="1"' in svg
    assert svg.count('class="component"') == 1
    assert SELECTED_STROKE not in svg


def test_freespace_svg_outlines_the_selection(
    tmp_path: Path, hooks_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    out = tmp_path / "fs.svg"
    args = ["freespace-svg", *hooks_args, "--eps", "0.6", "--out", str(out), "--select", "1"]
    assert main(args) == EXIT_YES
    svg = out.read_text(encoding="utf-8")
    assert svg.count('class="component"') == 2
    assert SELECTED_STROKE in svg
    assert _report(capsys)["components"] == 2


def test_freespace_svg_of_empty_free_space(
    tmp_path: Path, curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    out = tmp_path / "fs.svg"
    assert main(["freespace-svg", *curve_args, "--eps", "0.5", "--out", str(out)]) == EXIT_YES
    svg = out.read_text(encoding="utf-8")
    assert 'data-components="0"' in svg
    assert 'class="component"' not in svg
    assert _report(capsys)["components"] == 0


def test_freespace_svg_unknown_selection(
    tmp_path: Path, curve_args: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    out = tmp_path / "fs.svg"
    args = ["freespace-svg", *curve_args, "--eps", "1", "--out", str(out), "--select", "0,5"]
    assert main(args) == EXIT_ERROR
    assert "unknown component ids [5]" in capsys.readouterr().err
    assert not out.exists()


def test_component_colors() -> None:
    assert component_colors(3) == list(COMPONENT_PALETTE[:3])
    many = component_colors(12)
    assert len(set(many)) == 12
    assert many[0] == "hsl(0.0, 70%, 50%)"


@pytest.mark.parametrize(
    ("dimacs", "status", "selection"),
    [
        ("p cnf 1 1\n1 -1 0\n", EXIT_YES, [0, 3, 4, 7]),
        ("p cnf 1 2\n1 0\n-1 0\n", EXIT_NO, None),
    ],
)
def test_boxgen_then_boxsolve(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
    dimacs: str,
    status: int,
    selection: list[int] | None,
) -> None:
    cnf, instance = tmp_path / "f.cnf", tmp_path / "boxes.json"
    cnf.write_text(dimacs, encoding="utf-8")

    assert main(["boxgen", "--cnf", str(cnf), "--out", str(instance)]) == EXIT_YES
    generated = _report(capsys)
    assert (generated["boxes"], generated["k"]) == (8, 4)

    assert main(["boxsolve", "--in", str(instance)]) == status
    assert _report(capsys) == {"answer": status == EXIT_YES, "k": 4, "selection": selection}


def test_boxgen_malformed_formula(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 1\n1\n", encoding="utf-8")
    status = main(["boxgen", "--cnf", str(cnf), "--out", str(tmp_path / "boxes.json")])
    assert status == EXIT_ERROR
    assert "not terminated" in capsys.readouterr().err
