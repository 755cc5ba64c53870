"""Provider-backed answer generation with server-side contract checks.

The provider is re-prompted exactly once when its envelope breaks the
contract; a second violation surfaces as GenerationContractError. Silent
repair is off the table — it would mask grounding failures.
"""
from __future__ import annotations

import time

import httpx

from ..errors import GenerationContractError, ProviderUnavailableError
from .evidence import EvidenceBundle, excerpt
from .prompts import REPAIR_PROMPT, SYSTEM_PROMPT, build_user_prompt
from .structured import (
    AnswerEnvelope,
    QueryRequest,
    SourceRef,
    StructuredAnswer,
    envelope_violations,
    parse_envelope,
)

REMOTE_ATTEMPTS = 3


def _evidence_blocks(ev: EvidenceBundle) -> list[str]:
    blocks = []
    for item in ev.items:
        r = item.record
        blocks.append(
            f"[{r.record_id}] group={r.stakeholder_group} country={r.country} "
            f"language={r.language} initiative={r.initiative_title or r.initiative_id}\n"
            f"{item.text}"
        )
    return blocks


def _sources_for(ev: EvidenceBundle, cited: list[str]) -> list[SourceRef]:
    wanted = set(cited)
    out = []
    for item in ev.items:  # evidence rank order keeps output deterministic
        r = item.record
        if r.record_id in wanted:
            out.append(
                SourceRef(
                    record_id=r.record_id,
                    initiative_title=r.initiative_title,
                    stakeholder_group=r.stakeholder_group,
                    organization_name=r.organization_name,
                    country=r.country,
                    language=r.language,
                    excerpt=excerpt(r.text),
                )
            )
    return out


def _answer_from_envelope(env: AnswerEnvelope, ev: EvidenceBundle) -> StructuredAnswer:
    return StructuredAnswer(
        overview=env.overview,
        group_insights=env.group_insights,
        recommendations=env.recommendations,
        sources=_sources_for(ev, env.citations),
        insufficient_evidence=False,
        answer_language=env.language,
    )


def generate_answer(
    q: QueryRequest, ev: EvidenceBundle, provider
) -> StructuredAnswer:
    """Run the provider, validate its envelope, re-prompt once on failure."""
    language = q.answer_language or "en"
    user = build_user_prompt(q.question, language, _evidence_blocks(ev))
    attempts: list[list[str]] = []
    prompt = user
    for _ in range(2):
        raw = provider.complete(SYSTEM_PROMPT, prompt)
        try:
            env = parse_envelope(raw)
            violations = envelope_violations(env, ev, language)
        except ValueError as exc:
            violations = [str(exc)]
            env = None
        if env is not None and not violations:
            return _answer_from_envelope(env, ev)
        attempts.append(violations)
        prompt = user + "\n\n" + REPAIR_PROMPT.format(violations="\n".join(f"- {v}" for v in violations))
    raise GenerationContractError(
        "provider violated the answer contract twice",
        violations=[v for vs in attempts for v in vs],
    )


class RemoteChatProvider:
    """Chat-completions-style JSON-over-HTTP generation provider."""

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key: str = "",
        timeout_s: float = 60.0,
        retry_wait_s: float = 0.5,
        transport: httpx.BaseTransport | None = None,
    ):
        headers = {}
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self.endpoint = endpoint
        self.model = model
        self.retry_wait_s = retry_wait_s
        self._client = httpx.Client(
            timeout=timeout_s, headers=headers, transport=transport
        )

    def close(self) -> None:
        self._client.close()

    def complete(self, system: str, user: str) -> str:
        payload = {
            "model": self.model,
            "messages": [
                {"role": "system", "content": system},
                {"role": "user", "content": user},
            ],
        }
        last_error: Exception | None = None
        for attempt in range(REMOTE_ATTEMPTS):
            try:
                resp = self._client.post(self.endpoint, json=payload)
                if resp.status_code >= 500:
                    last_error = ProviderUnavailableError(
                        f"generation endpoint returned {resp.status_code}"
                    )
                else:
                    resp.raise_for_status()
                    return resp.json()["choices"][0]["message"]["content"]
            except (httpx.HTTPError, KeyError, IndexError, TypeError) as exc:
                last_error = exc
            if attempt < REMOTE_ATTEMPTS - 1:
                time.sleep(self.retry_wait_s * (2**attempt))
        raise ProviderUnavailableError(
            f"generation provider failed after {REMOTE_ATTEMPTS} attempts: {last_error}"
        )
