"""Answer localization.

Only the three answer parts are translated. Source excerpts stay in
their original language with their language tag — readers validating
sources should see the submission as written. A failed translation
returns the untranslated answer flagged, never an error page.
"""
from __future__ import annotations

from ..records import EU_LANGUAGES
from .structured import StructuredAnswer


class TranslationProvider:
    """Protocol: translate(texts, target_language) -> list[str], same order."""

    def translate(self, texts: list[str], target_language: str) -> list[str]:
        raise NotImplementedError


def localize(
    answer: StructuredAnswer,
    target_language: str,
    provider: TranslationProvider | None,
) -> StructuredAnswer:
    if target_language not in EU_LANGUAGES:
        raise ValueError(f"unsupported answer language: {target_language!r}")
    if answer.insufficient_evidence or answer.answer_language == target_language:
        return answer
    if provider is None:
        return answer.model_copy(update={"localization_failed": True})

    flat: list[str] = [answer.overview]
    for bullets in answer.group_insights.values():
        flat.extend(bullets)
    flat.extend(answer.recommendations)
    try:
        translated = provider.translate(flat, target_language)
        if len(translated) != len(flat):
            raise ValueError("translator returned wrong number of texts")
    except Exception:
        return answer.model_copy(update={"localization_failed": True})

    cursor = iter(translated)
    overview = next(cursor)
    group_insights = {
        group: [next(cursor) for _ in bullets]
        for group, bullets in answer.group_insights.items()
    }
    recommendations = [next(cursor) for _ in answer.recommendations]
    return answer.model_copy(
        update={
            "overview": overview,
            "group_insights": group_insights,
            "recommendations": recommendations,
            "answer_language": target_language,
            "localization_failed": False,
        }
    )
