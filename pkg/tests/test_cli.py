import json

import pytest

from wgideals.cli import SLOW_LIMIT, estimate_size, main, make_parser
from wgideals.export import parse_json
from wgideals.tableaux import hook_length_count


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_regular_full_verify(capsys):
    code, out, err = run(capsys, "regular", "--n", "3", "--verify", "full")
    assert code == 0
    assert json.loads(err)["checks"]
    wg = parse_json(out)
    assert len(wg.table) == 6


def test_specht_stat(capsys):
    code, out, _ = run(capsys, "specht", "--lambda", "3,3,1", "--stat", "max-mu", "--export", "none")
    assert code == 0 and out.strip() == "max |mu| = 1"
    code, out, _ = run(capsys, "specht", "--lambda", "3,3,1", "--stat", "max-mu", "--export", "none",
                       "--engine", "bulk")
    assert out.strip() == "max |mu| = 1"


def test_dot_and_table(capsys, tmp_path):
    code, out, _ = run(capsys, "onedim", "--n", "4", "--J1", "1", "--J2", "3", "--export", "dot")
    assert out.splitlines() == ["graph wgraph {", '  1 [label="1 {1}"];', "}"]
    target = tmp_path / "t.txt"
    code, out, _ = run(capsys, "parabolic", "--n", "3", "--J", "1", "--export", "table", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "c_1 = b_1"


def test_dihedral_and_induced(capsys):
    assert run(capsys, "regular", "--m", "5", "--verify", "relations", "--export", "none")[0] == 0
    code, out, _ = run(capsys, "induced", "--n", "4", "--lambda", "2,1", "--verify", "relations")
    assert code == 0 and len(parse_json(out).table) == 8


@pytest.mark.parametrize("argv", [
    ["regular"],
    ["regular", "--n", "3", "--m", "4"],
    ["parabolic", "--n", "3", "--J", "7"],
    ["parabolic", "--n", "3", "--J", "x"],
    ["specht", "--lambda", "5,5,3,3", "--stat", "max-mu"],
    ["onedim", "--n", "3", "--J1", "1", "--J2", "1"],
    ["regular", "--n", "3", "--threads", "0"],
    ["regular", "--n", "3", "--spill", "/tmp"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("wgraph: error:")


def test_golden_subcommand(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0 and json.loads(out)["mismatches"] == []
    code, _, err = run(capsys, "golden", "--printed")
    assert code == 1
    assert json.loads(err)["mismatches"][0]["computed"] == "-q^2"


def test_size_estimates():
    parse = make_parser().parse_args
    assert estimate_size(parse(["specht", "--lambda", "5,5,3,3"])) == hook_length_count((5, 5, 3, 3)) > SLOW_LIMIT
    assert estimate_size(parse(["regular", "--n", "5"])) == 120
    assert estimate_size(parse(["parabolic", "--n", "5", "--J", "1,2,4"])) == 10
    assert estimate_size(parse(["regular", "--m", "6"])) == 12
    assert estimate_size(parse(["induced", "--n", "5", "--lambda", "2,1"])) == 40


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("WGRAPH_THREADS", "4")
    a = run(capsys, "regular", "--n", "3")[1]
    monkeypatch.setenv("WGRAPH_THREADS", "1")
    assert run(capsys, "regular", "--n", "3")[1] == a
