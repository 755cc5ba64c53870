"""Core record types shared across ingestion, indexing and answering."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import datetime, timezone

# The 24 official EU languages, ISO 639-1.
EU_LANGUAGES = frozenset({
    "bg", "hr", "cs", "da", "nl", "en", "et", "fi", "fr", "de", "el", "hu",
    "ga", "it", "lv", "lt", "mt", "pl", "pt", "ro", "sk", "sl", "es", "sv",
})

STAKEHOLDER_GROUPS = (
    "citizen",
    "company",
    "ngo",
    "academic_research",
    "public_authority",
    "trade_union",
    "other",
    "anonymous",
)

UNKNOWN = "unknown"


@dataclass(frozen=True)
class RawSubmission:
    """One unparsed feedback submission as delivered by a source."""

    source_id: str
    initiative_id: str
    payload: str
    declared_metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.source_id:
            raise ValueError("source_id must be non-empty")


@dataclass(frozen=True)
class InitiativeMeta:
    """Identity of the initiative a batch of submissions belongs to."""

    initiative_id: str
    initiative_title: str = ""
    topic: str = ""


@dataclass(frozen=True)
class FeedbackRecord:
    """A normalized feedback submission ready for indexing."""

    record_id: str
    initiative_id: str
    initiative_title: str
    topic: str
    stakeholder_group: str
    organization_name: str | None
    country: str
    language: str
    submitted_at: datetime
    text: str

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "initiative_id": self.initiative_id,
            "initiative_title": self.initiative_title,
            "topic": self.topic,
            "stakeholder_group": self.stakeholder_group,
            "organization_name": self.organization_name,
            "country": self.country,
            "language": self.language,
            "submitted_at": self.submitted_at.astimezone(timezone.utc).isoformat(),
            "text": self.text,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FeedbackRecord":
        ts = data["submitted_at"]
        if isinstance(ts, str):
            ts = parse_timestamp(ts)
        return cls(
            record_id=data["record_id"],
            initiative_id=data["initiative_id"],
            initiative_title=data.get("initiative_title", ""),
            topic=data.get("topic", ""),
            stakeholder_group=data.get("stakeholder_group", "other"),
            organization_name=data.get("organization_name"),
            country=data.get("country", UNKNOWN),
            language=data.get("language", UNKNOWN),
            submitted_at=ts,
            text=data["text"],
        )


def record_id_for(initiative_id: str, source_id: str, text: str) -> str:
    """Stable content-derived identifier for a feedback record."""
    digest = hashlib.sha256(
        "\x1f".join((initiative_id, source_id, text)).encode("utf-8")
    ).hexdigest()
    return digest[:16]


def parse_timestamp(value: str) -> datetime:
    """Parse a submission timestamp into an aware UTC datetime.

    Accepts ISO 8601 (with or without 'Z') and a couple of portal-style
    fallbacks. Raises ValueError when nothing matches.
    """
    value = value.strip()
    if not value:
        raise ValueError("empty timestamp")
    candidate = value[:-1] + "+00:00" if value.endswith("Z") else value
    try:
        dt = datetime.fromisoformat(candidate)
    except ValueError:
        dt = None
    if dt is None:
        for fmt in ("%Y-%m-%d %H:%M:%S", "%d/%m/%Y %H:%M", "%d/%m/%Y"):
            try:
                dt = datetime.strptime(value, fmt)
                break
            except ValueError:
                continue
    if dt is None:
        raise ValueError(f"unparseable timestamp: {value!r}")
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


@dataclass
class IngestReport:
    """Outcome accounting for one ingestion run."""

    fetched: int = 0
    accepted: int = 0
    duplicates_dropped: int = 0
    rejected_reasons: dict[str, int] = field(default_factory=dict)

    @property
    def rejected(self) -> int:
        return sum(self.rejected_reasons.values())

    def reject(self, reason: str) -> None:
        self.rejected_reasons[reason] = self.rejected_reasons.get(reason, 0) + 1

    def check(self) -> None:
        if self.fetched != self.accepted + self.rejected + self.duplicates_dropped:
            raise AssertionError(
                f"report arithmetic broken: fetched={self.fetched} != "
                f"{self.accepted} + {self.rejected} + {self.duplicates_dropped}"
            )

    def to_dict(self) -> dict:
        return {
            "fetched": self.fetched,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "rejected_reasons": dict(self.rejected_reasons),
            "duplicates_dropped": self.duplicates_dropped,
        }
