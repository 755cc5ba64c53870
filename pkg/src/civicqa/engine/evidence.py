"""Evidence packing and the refusal gate in front of generation."""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..index import ScoredHit
from ..records import FeedbackRecord

DEFAULT_BUDGET_CHARS = 12000
DEFAULT_MIN_SCORE = 0.25
DEFAULT_MIN_HITS = 2
MIN_TRUNCATED_CHARS = 40

_SENTENCE_RE = re.compile(r"(?<=[.!?])\s+")


def split_sentences(text: str) -> list[str]:
    return [s for s in _SENTENCE_RE.split(text.strip()) if s]


def sentence_prefix(text: str, limit: int) -> str:
    """Longest prefix of whole sentences fitting in limit characters."""
    if limit <= 0:
        return ""
    out: list[str] = []
    used = 0
    for sentence in split_sentences(text):
        needed = len(sentence) + (1 if out else 0)
        if used + needed > limit:
            break
        out.append(sentence)
        used += needed
    return " ".join(out)


def excerpt(text: str, limit: int = 240) -> str:
    """Short quote for source listings; falls back to a hard cut."""
    chosen = sentence_prefix(text, limit)
    return chosen if chosen else text[:limit].rstrip()


@dataclass(frozen=True)
class EvidenceItem:
    hit: ScoredHit
    record: FeedbackRecord
    text: str
    truncated: bool = False


@dataclass(frozen=True)
class EvidenceBundle:
    items: tuple[EvidenceItem, ...] = ()
    budget_chars: int = DEFAULT_BUDGET_CHARS
    truncation_applied: bool = False

    def ids(self) -> set[str]:
        return {item.record.record_id for item in self.items}

    def groups(self) -> set[str]:
        return {item.record.stakeholder_group for item in self.items}


def build_evidence(
    hits: list[ScoredHit],
    lookup,
    budget_chars: int = DEFAULT_BUDGET_CHARS,
) -> EvidenceBundle:
    """Pack hits in rank order into a character budget.

    lookup maps record_id -> FeedbackRecord. A hit that would overflow
    the budget is cut back to a sentence boundary; when not even that
    fits, it is dropped and packing stops (packing never skips ahead).
    Rank 1 is always represented, hard-cut if necessary.
    """
    items: list[EvidenceItem] = []
    truncation_applied = False
    remaining = budget_chars
    for pos, hit in enumerate(hits):
        record = lookup(hit.record_id)
        if record is None:
            raise KeyError(f"evidence hit {hit.record_id} not in corpus store")
        text = record.text
        if len(text) <= remaining:
            items.append(EvidenceItem(hit, record, text))
            remaining -= len(text)
            continue
        cut = sentence_prefix(text, remaining)
        if len(cut) >= MIN_TRUNCATED_CHARS:
            items.append(EvidenceItem(hit, record, cut, truncated=True))
            remaining -= len(cut)
            truncation_applied = True
            continue
        if pos == 0:  # never drop rank 1
            hard = text[: max(remaining, 0)].rstrip() or text[:MIN_TRUNCATED_CHARS]
            items.append(EvidenceItem(hit, record, hard, truncated=True))
            remaining -= len(hard)
            truncation_applied = True
            continue
        truncation_applied = True  # dropped for lack of room
        break
    return EvidenceBundle(
        items=tuple(items),
        budget_chars=budget_chars,
        truncation_applied=truncation_applied,
    )


@dataclass(frozen=True)
class Sufficiency:
    sufficient: bool
    reason: str | None = None
    qualifying_hits: int = 0


def check_sufficiency(
    hits: list[ScoredHit],
    min_score: float = DEFAULT_MIN_SCORE,
    min_hits: int = DEFAULT_MIN_HITS,
) -> Sufficiency:
    """Refuse rather than let generation improvise over weak evidence."""
    if not hits:
        return Sufficiency(False, "no_hits", 0)
    qualifying = sum(1 for h in hits if h.score >= min_score)
    if qualifying < min_hits:
        return Sufficiency(False, "low_score", qualifying)
    return Sufficiency(True, None, qualifying)
