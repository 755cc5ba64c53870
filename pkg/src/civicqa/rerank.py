"""Country-diversity re-ranking of retrieved hits.

Surfacing six hits from one country reads as bias to the people checking
the sources, so a greedy pass bounds how often a single country appears.
Availability still beats diversity: when the capped pass cannot fill the
target, a second pass tops up ignoring the cap. The output is always a
subset of the input in the input's score order.
"""
from __future__ import annotations

from dataclasses import replace

from .index import ScoredHit


def rerank_diverse(
    hits: list[ScoredHit],
    country_cap: int,
    target: int,
    language_cap: int | None = None,
) -> list[ScoredHit]:
    """Admit hits in score order while per-country counts stay under cap.

    language_cap is the analogous bound on the query-language skew of
    retrieval; it is off (None) unless configured.
    """
    if country_cap < 1:
        raise ValueError("country_cap must be positive")
    if target < 1:
        raise ValueError("target must be positive")

    admitted: list[int] = []
    country_counts: dict[str, int] = {}
    language_counts: dict[str, int] = {}
    for i, hit in enumerate(hits):
        if len(admitted) >= target:
            break
        country = hit.meta.get("country", "")
        language = hit.meta.get("language", "")
        if country_counts.get(country, 0) >= country_cap:
            continue
        if language_cap is not None and language_counts.get(language, 0) >= language_cap:
            continue
        admitted.append(i)
        country_counts[country] = country_counts.get(country, 0) + 1
        language_counts[language] = language_counts.get(language, 0) + 1

    if len(admitted) < target:  # fill pass: availability beats diversity
        taken = set(admitted)
        for i in range(len(hits)):
            if len(admitted) >= target:
                break
            if i not in taken:
                admitted.append(i)

    admitted.sort()  # keep the input's score order
    return [
        replace(hits[i], rank=rank)
        for rank, i in enumerate(admitted, start=1)
    ]
