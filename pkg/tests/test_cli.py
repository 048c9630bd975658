import json

import pytest

from consecutive_davenport.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_c(capsys):
    code, out, _ = run(capsys, "compute-c", "--group", "C6", "--weights", "full")
    assert code == 0
    assert out.splitlines()[0] == "C_full(C6) = 2"


def test_compute_d_json(capsys):
    code, out, _ = run(capsys, "compute-d", "--group", "A[2,2]", "--weights", "full", "--json")
    data = json.loads(out)
    assert code == 0 and data["value"] == 3 and data["kind"] == "davenport" and data["conclusive"]


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute-c", "--group", "C5", "--csv")
    assert code == 0
    assert out.splitlines() == ["group,weights,value,bound,verdict", "C5,{1},5,5,EXACT"]


def test_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "compute-c", "--group", "A[2,2,2]", "--weights", "full", "--max-states", "1")
    assert code == 2 and "inconclusive" in out


def test_is_free(capsys):
    code, out, _ = run(capsys, "is-free", "--group", "M(4,2,4,3)", "--seq", "y,y,y,x,y,y,y")
    assert code == 0 and out.strip() == "FREE"
    code, out, _ = run(capsys, "is-free", "--group", "C4", "--weights", "{2}", "--seq", "1,1", "--json")
    data = json.loads(out)
    assert code == 1 and data["certificate"] == {"start": 1, "end": 2, "weights": [2, 2]}


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--group", "P(C2,S3)")
    assert code == 0
    assert len(out.splitlines()[0].split(",")) == 11
    assert "FREE" in out.splitlines()[1]


def test_sweep_subset(capsys):
    code, out, _ = run(capsys, "sweep", "--group", "C4", "--group", "Q8", "--csv")
    assert code == 0
    assert out.splitlines() == ["group,weights,value,bound,verdict", "C4,{1},4,4,EQUAL", "Q8,{1},8,8,EQUAL"]


@pytest.mark.parametrize(
    "argv",
    [
        ["compute-c", "--group", "X5"],
        ["compute-c", "--group", "C5", "--weights", "{9}"],
        ["compute-d", "--group", "D4"],
        ["compute-c"],
        ["frobnicate"],
        ["compute-c", "--group", "C5", "--json", "--csv"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 3


def test_regression_report_deterministic_is_byte_identical(capsys):
    first = run(capsys, "verify-paper", "--only", "1,5,6", "--deterministic")
    second = run(capsys, "verify-paper", "--only", "1,5,6", "--deterministic")
    assert first == second
    assert first[0] == 0 and first[1].count("PASS") == 3


def test_cache_round_trip(capsys, tmp_path):
    path = str(tmp_path / "r.jsonl")
    assert run(capsys, "compute-c", "--group", "C7", "--cache", path)[0] == 0
    code, out, _ = run(capsys, "cache", "--cache", path, "--verify-cache")
    assert code == 0 and "reproduced" in out and "C7" in out
    # second compute is served from the cache
    assert run(capsys, "compute-c", "--group", "C7", "--cache", path)[1].startswith("C_{1}(C7) = 7")


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    path = tmp_path / "env.jsonl"
    monkeypatch.setenv("DAVENPORT_CACHE", str(path))
    run(capsys, "compute-c", "--group", "C3")
    assert path.exists() and "C3" in path.read_text()
