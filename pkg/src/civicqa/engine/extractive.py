"""Deterministic extractive answers: the offline stand-in for generation.

No model involved — the three parts are templated from the evidence
itself, so the full pipeline stays testable and byte-stable without any
network access. Output is English; localization is a separate step.
"""
from __future__ import annotations

from collections import Counter

from .evidence import EvidenceBundle, excerpt
from .generate import _sources_for
from .structured import QueryRequest, StructuredAnswer

_BULLET_CHARS = 200
_MAX_BULLETS_PER_GROUP = 2


def _composition(ev: EvidenceBundle) -> tuple[list[str], list[str], list[str]]:
    topics = Counter(i.record.topic for i in ev.items if i.record.topic)
    countries = Counter(i.record.country for i in ev.items if i.record.country)
    groups: list[str] = []
    for item in ev.items:  # first appearance == best rank
        g = item.record.stakeholder_group
        if g not in groups:
            groups.append(g)
    top_topics = [t for t, _ in sorted(topics.items(), key=lambda kv: (-kv[1], kv[0]))]
    top_countries = [c for c, _ in sorted(countries.items(), key=lambda kv: (-kv[1], kv[0]))]
    return top_topics, top_countries, groups


def _join(values: list[str]) -> str:
    if not values:
        return "unspecified"
    if len(values) == 1:
        return values[0]
    return ", ".join(values[:-1]) + " and " + values[-1]


def extractive_answer(q: QueryRequest, ev: EvidenceBundle) -> StructuredAnswer:
    if not ev.items:
        raise ValueError("extractive_answer needs non-empty evidence")

    topics, countries, groups = _composition(ev)
    n = len(ev.items)
    overview = (
        f"The {n} most relevant feedback submissions for this question concern "
        f"{_join(topics)}. They come from {_join(groups)} respondents across "
        f"{len(countries)} countr{'y' if len(countries) == 1 else 'ies'} "
        f"({_join(countries)}). The strongest match is a "
        f"{ev.items[0].record.stakeholder_group} submission from "
        f"{ev.items[0].record.country}: \"{excerpt(ev.items[0].text, _BULLET_CHARS)}\""
    )

    group_insights: dict[str, list[str]] = {}
    for group in groups:
        bullets = []
        for item in ev.items:
            if item.record.stakeholder_group != group:
                continue
            bullets.append(
                f"{excerpt(item.text, _BULLET_CHARS)} "
                f"({item.record.country}, {item.record.language})"
            )
            if len(bullets) >= _MAX_BULLETS_PER_GROUP:
                break
        group_insights[group] = bullets

    first = ev.items[0].record
    second = ev.items[1].record if len(ev.items) > 1 else first
    recommendations = [
        (
            f"Address the point ranked most relevant to this question, raised by a "
            f"{first.stakeholder_group} submission from {first.country} "
            f"[{first.record_id}]: \"{excerpt(ev.items[0].text, 160)}\""
        ),
        (
            f"Weigh the perspective of the {second.stakeholder_group} submission "
            f"from {second.country} [{second.record_id}] before the next revision: "
            f"\"{excerpt(ev.items[min(1, n - 1)].text, 160)}\""
        ),
    ]

    return StructuredAnswer(
        overview=overview,
        group_insights=group_insights,
        recommendations=recommendations,
        sources=_sources_for(ev, [i.record.record_id for i in ev.items]),
        insufficient_evidence=False,
        answer_language="en",
    )
