import json
from math import factorial

import pytest
from click.testing import CliRunner

from framestab.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_catalog_list(runner):
    result = runner.invoke(main, ["catalog", "list"])
    assert result.exit_code == 0
    ids = result.output.split()
    assert len(ids) >= 13
    assert "z4-pseudo-golay-1" in ids


def test_catalog_show(runner):
    result = runner.invoke(main, ["catalog", "show", "z4-len8-4"])
    assert result.exit_code == 0
    assert "3111 3111" in result.output.replace("  ", " ")


def test_analyze_len8_1(runner):
    result = runner.invoke(main, ["analyze", "--input", "z4-len8-1"])
    assert result.exit_code == 0
    assert "shape 4*2^6" in result.output
    assert "type II: True" in result.output
    assert "min Euclidean weight: 8" in result.output


def test_analyze_json(runner):
    result = runner.invoke(main, ["analyze", "--input", "z4-len8-4", "--json"])
    assert result.exit_code == 0
    info = json.loads(result.output)
    assert info["shape"] == "4^4"
    assert info["extremal"] is True
    assert info["c0"] == {"dim": 4, "min_weight": 4}


def test_analyze_parse_error(runner, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0123\n01x3\n")
    result = runner.invoke(main, ["analyze", "--input", str(bad)])
    assert result.exit_code != 0
    assert "line 2" in result.output


def test_analyze_empty_file(runner, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("\n")
    result = runner.invoke(main, ["analyze", "--input", str(empty)])
    assert result.exit_code != 0


def test_frame_case1(runner):
    result = runner.invoke(main, ["frame", "--input", "z4-len8-1", "--variant", "lattice"])
    assert result.exit_code == 0
    assert str(2**15 * factorial(16)) in result.output


def test_frame_json_roundtrip(runner, tmp_path):
    result = runner.invoke(
        main, ["frame", "--input", "z4-len8-4", "--variant", "orbifold", "--json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["pointwise"] == {"a": 5, "b": 0}
    assert payload["dims"]["P"] == 5
    # re-ingest the printed matrix: identical report
    show = runner.invoke(main, ["catalog", "show", "z4-len8-4"])
    matrix = "\n".join(line for line in show.output.splitlines() if not line.startswith("#"))
    path = tmp_path / "code.txt"
    path.write_text(matrix)
    again = runner.invoke(
        main, ["frame", "--input", str(path), "--variant", "orbifold", "--json"]
    )
    assert again.exit_code == 0
    payload2 = json.loads(again.output)
    payload2["code_id"] = payload["code_id"]
    assert payload2 == payload


def test_frame_orbifold_refused_for_weight_two_torsion(runner):
    result = runner.invoke(main, ["frame", "--input", "z4-len8-1", "--variant", "orbifold"])
    assert result.exit_code != 0
    assert "min weight of C0 is 2" in result.output


def test_aut_binary_catalog(runner):
    result = runner.invoke(main, ["aut", "--input", "bin-hamming8", "--binary"])
    assert result.exit_code == 0
    assert "= 1344" in result.output


def test_aut_z4(runner):
    result = runner.invoke(main, ["aut", "--input", "z4-len8-3", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["total_order"] == str(2**4 * 384)
    gens = payload["image_generators"]
    assert all(sorted(g) == list(range(1, 9)) for g in gens)


def test_aut_binary_file_input(runner, tmp_path):
    path = tmp_path / "pairs.txt"
    path.write_text("110000\n001100\n000011\n")
    result = runner.invoke(main, ["aut", "--input", str(path), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["kind"] == "binary"
    assert payload["order"] == str(2**3 * 6)  # wreath of pairs: 2^3 * 3! = 48


def test_frame_enumerate_h_flags(runner):
    forced = runner.invoke(
        main, ["frame", "--input", "z4-len8-1", "--variant", "lattice",
               "--enumerate-h", "--json"]
    )
    assert forced.exit_code == 0
    assert json.loads(forced.output)["h_count"] == "2027025"
    formula_only = runner.invoke(
        main, ["frame", "--input", "z4-len8-1", "--variant", "lattice",
               "--no-enumerate-h", "--json"]
    )
    assert formula_only.exit_code == 0
    assert json.loads(formula_only.output)["h_count"] == "2027025"


def test_aut_budget_exceeded(runner):
    result = runner.invoke(
        main, ["aut", "--input", "bin-golay", "--binary", "--aut-budget", "10"]
    )
    assert result.exit_code != 0
    assert "lower bound" in result.output
