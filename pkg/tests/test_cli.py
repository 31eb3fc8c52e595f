"""
Tests for the command-line surface
"""
import json

import pytest

from app.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main
from orchestrator.report import AnalysisReport

SMALL = ["--n", "2", "--m", "2", "--chain-one", "2"]


def test_analyze_json(capsys):
    assert main(["analyze", *SMALL, "--gray", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)

    assert data["length"] == 4
    assert data["size"] == 8
    assert data["quaternary_params"] == [4, 8, 4]
    assert data["gray"]["linear"] is True
    assert [data["gray"][k] for k in ("binary_length", "binary_size", "min_distance")] == [8, 8, 4]


def test_analyze_text(capsys):
    assert main(["analyze", "--n", "3", "--m", "1", "--union", "1,2", "--gray"]) == EXIT_OK
    report = AnalysisReport.from_text(capsys.readouterr().out)

    assert report.quaternary_params == (32, 64, 32)
    assert not report.gray.linear
    assert (report.gray.binary_length, report.gray.binary_size, report.gray.min_distance) == (64, 64, 32)


def test_json_and_text_carry_the_same_facts(capsys):
    main(["analyze", *SMALL, "--format", "json"])
    from_json = AnalysisReport.from_json(capsys.readouterr().out)
    main(["analyze", *SMALL, "--format", "text"])
    from_text = AnalysisReport.from_text(capsys.readouterr().out)
    assert from_json == from_text


def test_usage_errors(capsys):
    assert main(["analyze", "--n", "3", "--m", "3", "--chain-two", "4"]) == EXIT_USAGE
    assert main(["analyze", "--n", "2", "--m", "1", "--union", "1,2"]) == EXIT_USAGE
    assert main(["analyze", "--n", "11", "--m", "11", "--chain-one", "1", "--verify"]) == EXIT_USAGE
    assert main(["export", "--n", "13", "--m", "13", "--chain-one", "1", "--what", "defining-D"]) == EXIT_USAGE


def test_flag_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--n", "2", "--m", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["analyze", *SMALL, "--chain-two", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--n", "3", "--m", "1", "--union", "1"])
    assert info.value.code == 2


def export_lines(capsys, what):
    assert main(["export", *SMALL, "--what", what]) == EXIT_OK
    return capsys.readouterr().out.splitlines()


def test_export_header_and_defining_sets(capsys):
    lines = export_lines(capsys, "defining-L")
    assert lines[0] == "# n=2 m=2 ideal=chain-one(2) length=4"
    assert lines[1:] == ["0 1", "2 1", "0 3", "2 3"]
    assert export_lines(capsys, "defining-D")[1:] == ["0 1"]


def test_export_codewords(capsys):
    lines = export_lines(capsys, "codewords")[1:]
    assert lines == [
        "0 0 0 0", "0 2 0 2", "1 1 3 3", "1 3 3 1",
        "2 0 2 0", "2 2 2 2", "3 1 1 3", "3 3 1 1",
    ]


def test_export_generators_and_gray(capsys):
    assert export_lines(capsys, "generators")[1:] == ["0 2 0 2", "1 1 3 3"]
    gray = export_lines(capsys, "gray")[1:]
    assert len(gray) == 8
    assert all(len(line.split()) == 8 for line in gray)
    assert gray == sorted(gray)
    assert gray[0] == "0 0 0 0 0 0 0 0"


def test_export_to_file(tmp_path):
    out = tmp_path / "L.txt"
    assert main(["export", *SMALL, "--what", "defining-L", "--out", str(out)]) == EXIT_OK
    assert out.read_text().splitlines()[1:] == ["0 1", "2 1", "0 3", "2 3"]

    missing = tmp_path / "missing" / "L.txt"
    assert main(["export", *SMALL, "--what", "defining-L", "--out", str(missing)]) == EXIT_USAGE


def test_analyze_disagreement_exits_3(monkeypatch, capsys):
    from codes.analysis import closed_form_distribution
    from codes.poset import OrderIdealSpec

    wrong = closed_form_distribution(OrderIdealSpec.chain_one(2, 2, 1))
    monkeypatch.setattr("analyzers.fast_path_analyzer.fast_path_distribution", lambda spec: wrong)
    assert main(["analyze", *SMALL]) == EXIT_VERIFICATION
    assert "\"agreed\":false" in capsys.readouterr().out


def test_reproduce_is_deterministic(capsys):
    assert main(["reproduce"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["reproduce", "--jobs", "2"]) == EXIT_OK
    second = capsys.readouterr().out

    assert first == second
    assert first.splitlines()[-1] == "18 passed, 0 failed"
    assert all(line.startswith("PASS ") for line in first.splitlines()[:-1])
