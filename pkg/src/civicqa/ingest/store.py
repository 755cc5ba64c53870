"""Corpus store: the canonical set of accepted feedback records.

Line-oriented JSON on disk (one record per line, UTF-8), a couple of
lookup maps in memory. Writes go through a single lock — one writer at a
time, readers see complete records only.
"""
from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from ..records import FeedbackRecord
from .dedupe import dedupe_key


class CorpusStore:
    def __init__(self) -> None:
        self._records: dict[str, FeedbackRecord] = {}
        self._by_content: dict[tuple[str, str], str] = {}
        self._write_lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._records

    def get(self, record_id: str) -> FeedbackRecord | None:
        return self._records.get(record_id)

    def records(self) -> list[FeedbackRecord]:
        return list(self._records.values())

    def has_content(self, record: FeedbackRecord) -> bool:
        return dedupe_key(record) in self._by_content

    def add(self, record: FeedbackRecord) -> bool:
        """Insert a record; returns False when its content already exists."""
        with self._write_lock:
            key = dedupe_key(record)
            if key in self._by_content:
                return False
            self._records[record.record_id] = record
            self._by_content[key] = record.record_id
            return True

    # Vocabulary helpers for the filters endpoint: always derived from the
    # data actually present, never hard-coded.
    def distinct(self, field: str) -> list[str]:
        values = {
            getattr(r, field)
            for r in self._records.values()
            if getattr(r, field)
        }
        return sorted(values)

    def initiative_summary(self) -> list[dict]:
        counts: dict[str, dict] = {}
        for r in self._records.values():
            entry = counts.setdefault(
                r.initiative_id,
                {
                    "initiative_id": r.initiative_id,
                    "initiative_title": r.initiative_title,
                    "topic": r.topic,
                    "records": 0,
                },
            )
            entry["records"] += 1
        return sorted(counts.values(), key=lambda e: e["initiative_id"])

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with self._write_lock:
            with open(tmp, "w", encoding="utf-8") as fh:
                for record in self._records.values():
                    fh.write(json.dumps(record.to_dict(), sort_keys=True))
                    fh.write("\n")
            os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | Path) -> "CorpusStore":
        store = cls()
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                store.add(FeedbackRecord.from_dict(json.loads(line)))
        return store
