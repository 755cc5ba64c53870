"""Content-level deduplication of feedback records."""
from __future__ import annotations

from ..records import FeedbackRecord


def dedupe_key(record: FeedbackRecord) -> tuple[str, str]:
    # Content identity, not source id: scraped sources re-expose the same
    # comment under fresh ids and that is what pollutes retrieval.
    return (record.initiative_id, record.text)


def deduplicate(
    records: list[FeedbackRecord],
) -> tuple[list[FeedbackRecord], int]:
    """Collapse records sharing (initiative_id, text) to the earliest one.

    Survivors keep their input order. Ties on submitted_at keep the first
    occurrence.
    """
    earliest: dict[tuple[str, str], int] = {}
    for pos, record in enumerate(records):
        key = dedupe_key(record)
        best = earliest.get(key)
        if best is None or record.submitted_at < records[best].submitted_at:
            earliest[key] = pos
    survivors = set(earliest.values())
    kept = [r for i, r in enumerate(records) if i in survivors]
    return kept, len(records) - len(kept)
