"""Offline corpus import: the file-based substitute for live scraping.

The dump format (docs/corpus-format.md) is one JSON object per line with
field names matching FeedbackRecord; unknown fields are ignored and
record_id is optional (kept when present, derived when absent). Every
line goes through the same normalize -> language -> dedupe path as live
submissions, so importing an exported corpus is a no-op the second time.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from ..records import FeedbackRecord, IngestReport, InitiativeMeta, RawSubmission
from .language import detect_language
from .normalize import MIN_TEXT_CHARS, Rejection, clean_text, map_stakeholder, normalize
from .store import CorpusStore


def _line_to_submission(data: dict) -> tuple[RawSubmission, InitiativeMeta]:
    initiative_id = data["initiative_id"]
    text = data["text"]
    if not isinstance(initiative_id, str) or not initiative_id:
        raise ValueError("initiative_id missing")
    if not isinstance(text, str):
        raise ValueError("text missing")
    source_id = str(
        data.get("source_id")
        or data.get("record_id")
        or "dump-" + hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
    )
    declared = {}
    if data.get("stakeholder_group"):
        declared["user_type"] = str(data["stakeholder_group"])
    if data.get("organization_name"):
        declared["organization"] = str(data["organization_name"])
    if data.get("country"):
        declared["country"] = str(data["country"])
    if data.get("language"):
        declared["language"] = str(data["language"])
    declared["date"] = str(data.get("submitted_at", ""))
    raw = RawSubmission(
        source_id=source_id,
        initiative_id=initiative_id,
        payload=text,
        declared_metadata=declared,
    )
    meta = InitiativeMeta(
        initiative_id=initiative_id,
        initiative_title=str(data.get("initiative_title", "")),
        topic=str(data.get("topic", "")),
    )
    return raw, meta


def _canonical_record(data: dict) -> FeedbackRecord | Rejection:
    """Re-validate a line that already carries a record_id."""
    text = clean_text(str(data["text"]))
    if len(text) < MIN_TEXT_CHARS:
        return Rejection("empty_text", str(data["record_id"]))
    try:
        record = FeedbackRecord.from_dict({**data, "text": text})
    except ValueError:
        return Rejection("bad_timestamp", str(data["record_id"]))
    return FeedbackRecord(
        record_id=record.record_id,
        initiative_id=record.initiative_id,
        initiative_title=record.initiative_title,
        topic=record.topic,
        stakeholder_group=map_stakeholder(record.stakeholder_group),
        organization_name=record.organization_name,
        country=record.country,
        language=detect_language(text, declared=record.language),
        submitted_at=record.submitted_at,
        text=text,
    )


def import_dump(
    path: str | Path,
    store: CorpusStore,
    store_path: str | Path | None = None,
) -> IngestReport:
    """Import a dump file into the store; malformed lines never abort."""
    report = IngestReport()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            report.fetched += 1
            try:
                data = json.loads(line)
                if not isinstance(data, dict):
                    raise ValueError("line is not an object")
                if data.get("record_id"):
                    result = _canonical_record(data)
                else:
                    raw, meta = _line_to_submission(data)
                    result = normalize(raw, meta)
            except (ValueError, KeyError, TypeError):
                report.reject("parse")
                continue
            if isinstance(result, Rejection):
                report.reject(result.reason)
                continue
            if store.add(result):
                report.accepted += 1
            else:
                report.duplicates_dropped += 1
    report.check()
    if store_path is not None:
        store.save(store_path)
    return report
