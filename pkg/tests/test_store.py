import json

import pytest

from consecutive_davenport.groups import cyclic
from consecutive_davenport.solver import SearchConfig, compute_consecutive
from consecutive_davenport.store import ResultRecord, ResultStore, StoreConflict
from consecutive_davenport.weights import unweighted


def record(n=5, value=None):
    rec = ResultRecord.from_result(compute_consecutive(cyclic(n), unweighted(n)))
    if value is not None:
        rec.result["value"] = value
    return rec


def test_round_trip(tmp_path):
    path = tmp_path / "r.jsonl"
    store = ResultStore(path)
    assert len(store) == 0
    store.store(record())
    again = ResultStore(path)
    rec = again.get("C5", "{1}", "consecutive")
    assert rec is not None and rec.result["value"] == 5 and rec.result["witness"] == "1,1,1,1"
    assert json.loads(path.read_text().splitlines()[0])["group"] == "C5"


def test_empty_file(tmp_path):
    path = tmp_path / "r.jsonl"
    path.write_text("")
    assert len(ResultStore(path)) == 0


def test_conflict_is_an_error(tmp_path):
    path = tmp_path / "r.jsonl"
    store = ResultStore(path)
    store.store(record())
    with pytest.raises(StoreConflict):
        store.store(record(value=4))
    path.write_text(record().to_line() + "\n" + record(value=6).to_line() + "\n")
    with pytest.raises(StoreConflict):
        ResultStore(path)


def test_conclusive_record_replaces_inconclusive(tmp_path):
    store = ResultStore(tmp_path / "r.jsonl")
    capped = compute_consecutive(cyclic(6), unweighted(6), SearchConfig(max_length=2))
    store.store(ResultRecord.from_result(capped))
    store.store(record(6))
    assert store.get("C6", "{1}", "consecutive").result["value"] == 6
    store.store(ResultRecord.from_result(capped))
    assert store.get("C6", "{1}", "consecutive").conclusive


def test_corrupt_lines_are_skipped(tmp_path):
    path = tmp_path / "r.jsonl"
    path.write_text("{not json\n" + record().to_line() + "\n" + '{"group": "C3"}\n')
    store = ResultStore(path)
    assert store.corrupt == 2 and len(store) == 1
