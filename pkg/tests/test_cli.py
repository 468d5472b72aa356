"""Command line contract: subcommands, exit codes, canonical reports."""
from __future__ import annotations

import json

import pytest

from ramsey_ba.cli import main
from ramsey_ba.parallel import WORKERS_ENV
from ramsey_ba.ramsey import _arrows


def write(tmp_path, name, payload) -> str:
    target = tmp_path / name
    target.write_text(json.dumps(payload))
    return str(target)


@pytest.fixture
def algebras(tmp_path):
    return {
        "one_out": write(tmp_path, "one_out.json", {"chain_length": 1, "levels": ["out"]}),
        "small": write(tmp_path, "small.json", {"chain_length": 1, "levels": [0, "out"]}),
        "mid": write(tmp_path, "mid.json", {"chain_length": 1, "levels": [0, 0, "out"]}),
        "pure2": write(tmp_path, "pure2.json", {"chain_length": 1, "levels": ["out", "out"]}),
        "no_out": write(tmp_path, "no_out.json", {"chain_length": 1, "levels": [0, 0]}),
        "bad_level": write(tmp_path, "bad_level.json", {"chain_length": 1, "levels": [1, "out"]}),
    }


def run_cli(capsys, argv) -> tuple[int, dict]:
    code = main(argv)
    captured = capsys.readouterr()
    assert captured.out.endswith("\n")
    return code, json.loads(captured.out)


def test_validate_member_and_nonmember(capsys, algebras):
    code, report = run_cli(
        capsys, ["validate", "--kind", "bj", "--algebra", algebras["small"]]
    )
    assert code == 0 and report["member"] is True
    code, report = run_cli(
        capsys, ["validate", "--kind", "bj", "--algebra", algebras["no_out"]]
    )
    assert code == 1 and report["member"] is False


def test_copies_reports_embeddings(capsys, algebras):
    code, report = run_cli(
        capsys,
        ["copies", "--small", algebras["small"], "--big", algebras["mid"]],
    )
    assert code == 0 and report["count"] == 3
    assert [e["block_of"] for e in report["embeddings"]] == [
        [0, 0, 1],
        [0, 1, 1],
        [1, 0, 1],
    ]


def test_arrow_exit_codes(capsys, algebras):
    code, report = run_cli(
        capsys,
        ["arrow", "--c", algebras["mid"], "--b", algebras["small"],
         "--a", algebras["small"], "-k", "2"],
    )
    assert code == 0 and report["certificate"]["verdict"] == "holds"
    code, report = run_cli(
        capsys,
        ["arrow", "--c", algebras["mid"], "--b", algebras["mid"],
         "--a", algebras["small"], "-k", "2"],
    )
    assert code == 1
    assert report["certificate"]["verdict"] == "fails"
    assert report["certificate"]["bad_coloring"] is not None


def test_witness_constructs_and_reports_minimal(capsys, algebras):
    code, report = run_cli(
        capsys,
        ["witness", "--kind", "bu", "--a", algebras["small"],
         "--b", algebras["mid"], "--minimal"],
    )
    assert code == 0
    constructed = report["constructed"]
    assert constructed["witness"]["levels"] == [0, 0, 0, 0, 0, 0, "out"]
    assert constructed["certificate"]["verdict"] == "holds"
    assert report["minimal"]["size"] == 6
    assert report["minimal"]["witness"]["levels"] == [0, 0, 0, 0, 0, "out"]


def test_witness_bound_exceeded_is_usage_error(capsys, algebras):
    code, report = run_cli(
        capsys,
        ["witness", "--kind", "bu", "--a", algebras["small"],
         "--b", algebras["mid"], "--max-atoms", "4"],
    )
    assert code == 2
    assert report["error"]["type"] == "bound-exceeded"


def test_amalgamate_success(capsys, tmp_path, algebras):
    f = write(tmp_path, "f.json", {"block_of": [0, 0], "ordered": True})
    g = write(tmp_path, "g.json", {"block_of": [0, 0], "ordered": True})
    code, report = run_cli(
        capsys,
        ["amalgamate", "--kind", "bj", "--a", algebras["one_out"],
         "--b", algebras["small"], "--c", algebras["pure2"],
         "--f", f, "--g", g],
    )
    assert code == 0
    assert report["result"]["d"]["levels"] == [0, "out", "out"]
    assert report["result"]["r"]["block_of"] == [0, 1, 1]
    assert report["result"]["s"]["block_of"] == [0, 0, 1]
    assert report["result"]["identified"] == [[1, 1]]


def test_fraisse_suites_pass(capsys):
    code, report = run_cli(
        capsys,
        ["fraisse", "--kind", "bj", "--suite", "both", "--max-atoms", "3",
         "--chain-length", "1"],
    )
    assert code == 0
    assert report["hp"]["violations"] == []
    assert report["ap"]["violations"] == []
    assert report["ap"]["instances"] > 0


def test_chains_correspondence(capsys, algebras):
    code, report = run_cli(capsys, ["chains", "--algebra", algebras["mid"]])
    assert code == 0
    assert report["correspondence"]["matched"] is True
    assert report["correspondence"]["extending_chains"] == 2
    assert report["extending"] == [[[], [2], [0, 2], [0, 1, 2]],
                                   [[], [2], [1, 2], [0, 1, 2]]]


def test_forgetful_sweep(capsys):
    code, report = run_cli(
        capsys, ["forgetful", "--max-atoms", "3", "--chain-length", "2"]
    )
    assert code == 0
    assert report["sweep"]["violations"] == []


def test_parse_error_exit_code(capsys, tmp_path, algebras):
    code, report = run_cli(
        capsys, ["validate", "--kind", "bj", "--algebra", algebras["bad_level"]]
    )
    assert code == 2
    assert report["error"]["type"] == "LevelOutOfRange"
    missing = str(tmp_path / "absent.json")
    code, report = run_cli(capsys, ["validate", "--kind", "bj", "--algebra", missing])
    assert code == 2 and report["error"]["type"] == "ParseError"


def test_output_file_instead_of_stdout(capsys, tmp_path, algebras):
    target = tmp_path / "report.json"
    code = main(
        ["validate", "--kind", "bj", "--algebra", algebras["small"],
         "--output", str(target)]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["member"] is True


def test_reports_identical_across_worker_counts(capsys, algebras):
    args = ["fraisse", "--kind", "bj", "--suite", "ap", "--max-atoms", "3"]
    code_one = main(args + ["--workers", "1"])
    text_one = capsys.readouterr().out
    code_four = main(args + ["--workers", "4"])
    text_four = capsys.readouterr().out
    assert code_one == code_four == 0
    assert text_one == text_four


def test_workers_env_override(capsys, monkeypatch, algebras):
    args = ["fraisse", "--kind", "bj", "--suite", "hp", "--max-atoms", "3"]
    code = main(args)
    baseline = capsys.readouterr().out
    monkeypatch.setenv(WORKERS_ENV, "3")
    code_env = main(args)
    with_env = capsys.readouterr().out
    assert code == code_env == 0
    assert baseline == with_env


def test_deterministic_flag_is_accepted(capsys, algebras):
    _arrows.cache_clear()
    code, report = run_cli(
        capsys,
        ["arrow", "--c", algebras["mid"], "--b", algebras["mid"],
         "--a", algebras["small"], "-k", "2", "--deterministic"],
    )
    assert code == 1
    _arrows.cache_clear()
    code2, report2 = run_cli(
        capsys,
        ["arrow", "--c", algebras["mid"], "--b", algebras["mid"],
         "--a", algebras["small"], "-k", "2", "--no-deterministic"],
    )
    assert code2 == 1 and report2 == report
