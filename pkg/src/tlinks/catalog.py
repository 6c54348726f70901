"""
Append-only JSON-lines catalog of computed records.

Each line is one ``CatalogEntry``. The id hashes the kind together with the
input key (the spec text or parameters), so recomputing the same instance
never adds a second line.
"""

from __future__ import annotations

import dataclasses
import enum
import hashlib
import json
import os
import threading
import time
from pathlib import Path

ENV_VAR = "TLINKS_CATALOG"


class EntryKind(str, enum.Enum):
    TLINK_FULLTWIST = "tlink_fulltwist"
    SATELLITE = "satellite"
    CERTIFICATE = "certificate"


def entry_id(kind: EntryKind | str, key) -> str:
    blob = json.dumps({"kind": EntryKind(kind).value, "key": key}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: EntryKind
    key: object
    payload: dict
    timestamp: float

    @classmethod
    def make(cls, kind: EntryKind | str, key, payload: dict, timestamp: float | None = None) -> CatalogEntry:
        kind = EntryKind(kind)
        return cls(entry_id(kind, key), kind, key, payload, time.time() if timestamp is None else timestamp)

    def to_json(self) -> str:
        return json.dumps(
            {"id": self.id, "kind": self.kind.value, "key": self.key, "payload": self.payload,
             "timestamp": self.timestamp},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> CatalogEntry:
        d = json.loads(line)
        return cls(d["id"], EntryKind(d["kind"]), d["key"], d["payload"], d["timestamp"])


class Catalog:
    """Single-file store; appends are serialized through one lock."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._ids: set[str] = set()
        if self.path.exists():
            for entry in self.entries():
                self._ids.add(entry.id)

    @classmethod
    def from_env(cls) -> Catalog | None:
        path = os.environ.get(ENV_VAR)
        return cls(path) if path else None

    def __contains__(self, entry_or_id) -> bool:
        key = entry_or_id.id if isinstance(entry_or_id, CatalogEntry) else entry_or_id
        return key in self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def append(self, entry: CatalogEntry) -> bool:
        """Write the entry unless its id is already stored. Returns True if written."""
        with self._lock:
            if entry.id in self._ids:
                return False
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(entry.to_json() + "\n")
            self._ids.add(entry.id)
            return True

    def entries(self) -> list[CatalogEntry]:
        if not self.path.exists():
            return []
        with self.path.open(encoding="utf-8") as fh:
            return [CatalogEntry.from_json(line) for line in fh if line.strip()]
