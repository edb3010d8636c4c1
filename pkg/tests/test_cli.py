import io
import json

import pytest

from trapeze.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_analyze_table(capsys):
    rc, out, err = run_cli(capsys, "analyze", "aaabb")
    assert rc == 0
    assert "aaabb" in out
    assert "1 2 3 3 2 1" in out
    assert "unseparated" in out
    assert err == ""


def test_analyze_json(capsys):
    rc, out, _ = run_cli(capsys, "analyze", "--format", "json",
                         "aaabb", "ababadac")
    assert rc == 0
    data = json.loads(out)
    assert [d["word"] for d in data] == ["aaabb", "ababadac"]
    assert data[0]["R"] == 3 and data[0]["K"] == 2
    assert data[1]["profile"] == [1, 4, 5, 5, 5, 4, 3, 2, 1]
    assert data[1]["heart"] == "ababada"


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("abbcc\n\nabbac\n"))
    rc, out, _ = run_cli(capsys, "analyze", "--stdin", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert [d["word"] for d in data] == ["abbcc", "abbac"]


def test_analyze_no_words_is_usage_error(capsys):
    rc, out, err = run_cli(capsys, "analyze")
    assert rc == 2
    assert "no words" in err


def test_analyze_parse_error(capsys):
    rc, _, err = run_cli(capsys, "analyze", "Hello!")
    assert rc == 2
    assert err.startswith("trapeze:")


def test_graph_csv(capsys):
    rc, out, _ = run_cli(capsys, "graph", "aaabb")
    assert rc == 0
    assert out.splitlines() == ["n,C(n)", "0,1", "1,2", "2,3", "3,3",
                                "4,2", "5,1"]


def test_graph_ascii(capsys):
    rc, out, _ = run_cli(capsys, "graph", "--ascii", "aaabb")
    assert rc == 0
    lines = out.splitlines()
    assert "0 #" in lines
    assert "2 ###" in lines
    assert lines.index("0 #") > lines.index("5,1")


def test_census_csv_output(capsys):
    rc, out, _ = run_cli(capsys, "census", "-k", "2", "-n", "4")
    assert rc == 0
    assert out.splitlines() == [
        "length,total,gt,rich_gt,triangular_gt,rk_condition",
        "1,1,1,1,0,1",
        "2,2,2,2,1,2",
        "3,4,4,4,0,4",
        "4,8,8,8,4,8",
    ]


def test_census_full_flag(capsys):
    rc, out, _ = run_cli(capsys, "census", "-k", "2", "-n", "2", "--full")
    assert rc == 0
    assert out.splitlines()[1:] == ["1,2,2,2,0,2", "2,4,4,4,2,4"]


def test_census_bounds_error(capsys):
    rc, _, err = run_cli(capsys, "census", "-k", "9", "-n", "4")
    assert rc == 2
    assert err.startswith("trapeze:")


def test_verify_clean_range(capsys):
    rc, out, _ = run_cli(capsys, "verify", "-k", "2", "-n", "6")
    assert rc == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["failures"] == 0
    assert data["words"] == 63


def test_verify_deterministic_across_jobs(capsys):
    rc1, out1, _ = run_cli(capsys, "verify", "-k", "3", "-n", "5")
    rc2, out2, _ = run_cli(capsys, "verify", "-k", "3", "-n", "5",
                           "--jobs", "2")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_census_deterministic_across_jobs(capsys):
    _, out1, _ = run_cli(capsys, "census", "-k", "3", "-n", "6")
    _, out2, _ = run_cli(capsys, "census", "-k", "3", "-n", "6",
                         "--jobs", "2")
    assert out1 == out2


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
