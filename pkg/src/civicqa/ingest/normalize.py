"""Turn raw submissions into canonical feedback records."""
from __future__ import annotations

import html
import re
import unicodedata
from dataclasses import dataclass

from ..records import (
    UNKNOWN,
    FeedbackRecord,
    InitiativeMeta,
    RawSubmission,
    parse_timestamp,
    record_id_for,
)
from .language import detect_language

MIN_TEXT_CHARS = 3

_COMMENT_RE = re.compile(r"<!--.*?-->", re.DOTALL)
_TAG_RE = re.compile(r"</?[a-zA-Z!][^>]*>")
_WS_RE = re.compile(r"\s+")

# Declared user types seen on consultation portals, folded to the canonical
# stakeholder groups. Lookup is case-insensitive; unmapped values land in
# "other", absent values in "anonymous".
_STAKEHOLDER_MAP = {
    "citizen": "citizen",
    "eu citizen": "citizen",
    "non-eu citizen": "citizen",
    "private individual": "citizen",
    "individual": "citizen",
    "company": "company",
    "business": "company",
    "company/business organisation": "company",
    "company/business": "company",
    "sme": "company",
    "ngo": "ngo",
    "non-governmental organisation (ngo)": "ngo",
    "non-governmental organisation": "ngo",
    "environmental organisation": "ngo",
    "consumer organisation": "ngo",
    "civil society organisation": "ngo",
    "academic/research institution": "academic_research",
    "academic research institution": "academic_research",
    "academic": "academic_research",
    "research institution": "academic_research",
    "university": "academic_research",
    "public authority": "public_authority",
    "local authority": "public_authority",
    "regional authority": "public_authority",
    "government": "public_authority",
    "trade union": "trade_union",
    "anonymous": "anonymous",
    # canonical tokens map to themselves so exported corpora re-import losslessly
    "academic_research": "academic_research",
    "public_authority": "public_authority",
    "trade_union": "trade_union",
    "other": "other",
}


@dataclass(frozen=True)
class Rejection:
    """Why a raw submission was not turned into a record."""

    reason: str
    source_id: str = ""


def clean_text(payload: str) -> str:
    """Strip markup, normalize Unicode, collapse whitespace."""
    text = _COMMENT_RE.sub(" ", payload)
    text = _TAG_RE.sub(" ", text)
    text = html.unescape(text)
    text = unicodedata.normalize("NFC", text)
    text = "".join(
        ch if not unicodedata.category(ch).startswith("C") else " "
        for ch in text
    )
    return _WS_RE.sub(" ", text).strip()


def map_stakeholder(declared: str | None) -> str:
    if declared is None or not declared.strip():
        return "anonymous"
    return _STAKEHOLDER_MAP.get(declared.strip().lower(), "other")


def normalize_country(declared: str | None) -> str:
    if not declared:
        return UNKNOWN
    code = declared.strip().upper()
    return code if re.fullmatch(r"[A-Z]{2}", code) else UNKNOWN


def normalize(
    raw: RawSubmission, initiative: InitiativeMeta
) -> FeedbackRecord | Rejection:
    """Normalize one submission; rejection is a value, never an exception."""
    text = clean_text(raw.payload)
    if len(text) < MIN_TEXT_CHARS:
        return Rejection("empty_text", raw.source_id)

    meta = raw.declared_metadata
    try:
        submitted_at = parse_timestamp(meta.get("date", ""))
    except ValueError:
        return Rejection("bad_timestamp", raw.source_id)

    return FeedbackRecord(
        record_id=record_id_for(initiative.initiative_id, raw.source_id, text),
        initiative_id=initiative.initiative_id,
        initiative_title=initiative.initiative_title,
        topic=initiative.topic,
        stakeholder_group=map_stakeholder(meta.get("user_type")),
        organization_name=meta.get("organization") or None,
        country=normalize_country(meta.get("country")),
        language=detect_language(text, declared=meta.get("language")),
        submitted_at=submitted_at,
        text=text,
    )
