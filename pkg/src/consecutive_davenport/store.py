"""Append-only JSON-lines store of computed constants."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

DEFAULT_PATH = "results.jsonl"
ENV_VAR = "DAVENPORT_CACHE"


class StoreConflict(RuntimeError):
    """Two conclusive records disagree on the value for one key."""


Key = tuple[str, str, str]


@dataclass
class ResultRecord:
    group: str
    weights: str
    kind: str
    result: dict
    tool_version: str = __version__
    timestamp: str = ""

    @property
    def key(self) -> Key:
        return (self.group, self.weights, self.kind)

    @property
    def conclusive(self) -> bool:
        return bool(self.result.get("conclusive"))

    @classmethod
    def from_result(cls, result) -> "ResultRecord":
        return cls(result.group, result.weights, result.kind, result.to_json(),
                   timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))

    def to_line(self) -> str:
        return json.dumps(
            {"group": self.group, "weights": self.weights, "kind": self.kind, "result": self.result,
             "tool_version": self.tool_version, "timestamp": self.timestamp},
            sort_keys=True, ensure_ascii=False,
        )


def default_path() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_PATH))


class ResultStore:
    """Index over a results file.  Loading skips corrupt lines and counts them in ``corrupt``."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_path()
        self.index: dict[Key, ResultRecord] = {}
        self.corrupt = 0
        self.load()

    def load(self) -> dict[Key, ResultRecord]:
        self.index, self.corrupt = {}, 0
        if not self.path.exists():
            return self.index
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    raw = json.loads(line)
                    rec = ResultRecord(raw["group"], raw["weights"], raw["kind"], raw["result"],
                                       raw.get("tool_version", ""), raw.get("timestamp", ""))
                except (json.JSONDecodeError, KeyError, TypeError):
                    self.corrupt += 1
                    log.warning("skipping corrupt line %d in %s", lineno, self.path)
                    continue
                self._merge(rec)
        return self.index

    def _merge(self, rec: ResultRecord) -> None:
        old = self.index.get(rec.key)
        if old is not None and old.conclusive and rec.conclusive and old.result["value"] != rec.result["value"]:
            raise StoreConflict(
                f"conflicting values for {rec.key}: {old.result['value']} vs {rec.result['value']}"
            )
        if old is None or rec.conclusive or not old.conclusive:
            self.index[rec.key] = rec

    def get(self, group: str, weights: str, kind: str) -> ResultRecord | None:
        return self.index.get((group, weights, kind))

    def store(self, rec: ResultRecord) -> None:
        self._merge(rec)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(rec.to_line() + "\n")

    def __len__(self) -> int:
        return len(self.index)

    def records(self) -> list[ResultRecord]:
        return [self.index[k] for k in sorted(self.index)]
