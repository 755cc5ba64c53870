"""The structured answer contract and its validation.

An answer has exactly three parts — overview, per-group insights,
recommendations — plus the source list that grounds them. Either all
three parts are present, or the answer is an explicit refusal with
everything empty; there is no partial hybrid.
"""
from __future__ import annotations

import json
import re

from pydantic import BaseModel, Field, ValidationError

from ..records import EU_LANGUAGES
from .evidence import EvidenceBundle

ENVELOPE_VERSION = 1

MIN_RECOMMENDATIONS = 2
MAX_RECOMMENDATIONS = 3

_FENCE_RE = re.compile(r"^```[a-zA-Z]*\n(.*)\n```$", re.DOTALL)


class QueryRequest(BaseModel):
    question: str = Field(min_length=1, max_length=2000)
    whom: list[str] = Field(default_factory=list)
    about: list[str] = Field(default_factory=list)
    k: int = Field(default=8, ge=1)
    answer_language: str | None = None


class SourceRef(BaseModel):
    record_id: str
    initiative_title: str = ""
    stakeholder_group: str = ""
    organization_name: str | None = None
    country: str = ""
    language: str = ""
    excerpt: str = ""


class StructuredAnswer(BaseModel):
    overview: str = ""
    group_insights: dict[str, list[str]] = Field(default_factory=dict)
    recommendations: list[str] = Field(default_factory=list)
    sources: list[SourceRef] = Field(default_factory=list)
    insufficient_evidence: bool = False
    insufficiency_reason: str | None = None
    answer_language: str = "en"
    localization_failed: bool = False


def refusal(reason: str, language: str = "en") -> StructuredAnswer:
    return StructuredAnswer(
        insufficient_evidence=True,
        insufficiency_reason=reason,
        answer_language=language,
    )


class AnswerEnvelope(BaseModel):
    """The machine-parsable shape generation providers must emit."""

    version: int
    language: str
    overview: str
    group_insights: dict[str, list[str]]
    recommendations: list[str]
    citations: list[str]


def parse_envelope(raw: str) -> AnswerEnvelope:
    """Parse provider output; raises ValueError with a reason on failure."""
    text = raw.strip()
    fenced = _FENCE_RE.match(text)
    if fenced:
        text = fenced.group(1).strip()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not_json: {exc}") from exc
    try:
        return AnswerEnvelope.model_validate(data)
    except ValidationError as exc:
        missing = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
            for err in exc.errors()
        )
        raise ValueError(f"bad_shape: {missing}") from exc


def envelope_violations(
    env: AnswerEnvelope,
    evidence: EvidenceBundle,
    expected_language: str,
) -> list[str]:
    """Contract checks beyond shape; empty list means acceptable."""
    problems: list[str] = []
    if env.version != ENVELOPE_VERSION:
        problems.append(f"version must be {ENVELOPE_VERSION}, got {env.version}")
    if not env.overview.strip():
        problems.append("overview is empty")
    if not env.group_insights:
        problems.append("group_insights is empty")
    evidence_groups = evidence.groups()
    for group, bullets in env.group_insights.items():
        if group not in evidence_groups:
            problems.append(f"group_insights key {group!r} not present in evidence")
        if not bullets or any(not b.strip() for b in bullets):
            problems.append(f"group_insights[{group!r}] has empty bullets")
    n_recs = len(env.recommendations)
    if not MIN_RECOMMENDATIONS <= n_recs <= MAX_RECOMMENDATIONS:
        problems.append(
            f"recommendations must have {MIN_RECOMMENDATIONS}-{MAX_RECOMMENDATIONS} items, got {n_recs}"
        )
    if any(not r.strip() for r in env.recommendations):
        problems.append("recommendations contain empty items")
    if not env.citations:
        problems.append("citations is empty")
    evidence_ids = evidence.ids()
    for cited in env.citations:
        if cited not in evidence_ids:
            problems.append(f"citation {cited!r} not drawn from the evidence")
    if env.language != expected_language:
        problems.append(
            f"answer language {env.language!r} differs from requested {expected_language!r}"
        )
    return problems


def answer_violations(
    answer: StructuredAnswer,
    evidence_ids: set[str],
    evidence_groups: set[str],
) -> list[str]:
    """Check a final answer against the StructuredAnswer invariants."""
    problems: list[str] = []
    if answer.insufficient_evidence:
        if answer.overview or answer.group_insights or answer.recommendations:
            problems.append("refusal carries answer content")
        if answer.sources:
            problems.append("refusal carries sources")
        return problems
    if not answer.overview.strip():
        problems.append("overview empty")
    if not answer.group_insights:
        problems.append("group_insights empty")
    for group in answer.group_insights:
        if group not in evidence_groups:
            problems.append(f"invented group {group!r}")
    if not MIN_RECOMMENDATIONS <= len(answer.recommendations) <= MAX_RECOMMENDATIONS:
        problems.append(f"{len(answer.recommendations)} recommendations")
    if not answer.sources:
        problems.append("sources empty")
    for src in answer.sources:
        if src.record_id not in evidence_ids:
            problems.append(f"fabricated source {src.record_id!r}")
    if answer.answer_language not in EU_LANGUAGES:
        problems.append(f"answer_language {answer.answer_language!r} not an EU code")
    return problems
