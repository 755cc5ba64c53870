"""End-to-end question answering over an indexed corpus.

One object ties the stages together: embed the question, filtered exact
top-K, country-diversity re-rank, sufficiency gate, then either
provider-backed generation or the deterministic extractive fallback,
and finally localization. Stateless per request; safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .config import LOCAL_EXTRACTIVE, AppConfig, RetrievalConfig
from .embedding import LOCAL_DETERMINISTIC, MAX_TEXT_CHARS, embed_all, make_provider
from .engine import (
    QueryRequest,
    StructuredAnswer,
    build_evidence,
    check_sufficiency,
    extractive_answer,
    generate_answer,
    localize,
    refusal,
)
from .engine.generate import RemoteChatProvider
from .index import Filter, IndexedChunk, ScoredHit, VectorIndex
from .ingest.language import detect_language
from .ingest.store import CorpusStore
from .records import UNKNOWN, FeedbackRecord
from .rerank import rerank_diverse


@dataclass(frozen=True)
class RetrievalStats:
    candidates: int
    after_filter: int
    after_rerank: int


def chunk_for(record: FeedbackRecord, vector) -> IndexedChunk:
    return IndexedChunk(
        record_id=record.record_id,
        vector=vector,
        meta={
            "initiative_id": record.initiative_id,
            "topic": record.topic,
            "stakeholder_group": record.stakeholder_group,
            "country": record.country,
            "language": record.language,
            "submitted_at": record.submitted_at.isoformat(),
        },
        truncated=len(record.text) > MAX_TEXT_CHARS,
    )


def build_index(store: CorpusStore, embed_provider) -> VectorIndex:
    records = store.records()
    index = VectorIndex(dim=embed_provider.cfg.dim)
    vectors = embed_all([r.text for r in records], embed_provider)
    for record, vector in zip(records, vectors):
        index.upsert(chunk_for(record, vector))
    return index


class AnswerPipeline:
    def __init__(
        self,
        store: CorpusStore,
        index: VectorIndex,
        embed_provider,
        generation_provider=None,
        translation_provider=None,
        retrieval: RetrievalConfig | None = None,
    ):
        self.store = store
        self.index = index
        self.embed_provider = embed_provider
        self.generation_provider = generation_provider
        self.translation_provider = translation_provider
        self.retrieval = retrieval or RetrievalConfig()

    @classmethod
    def from_config(
        cls,
        cfg: AppConfig,
        store: CorpusStore,
        index: VectorIndex | None = None,
        offline: bool = False,
    ) -> "AnswerPipeline":
        embed_cfg = cfg.embedding
        if offline and embed_cfg.kind != LOCAL_DETERMINISTIC:
            embed_cfg = replace(embed_cfg, kind=LOCAL_DETERMINISTIC, endpoint="", api_key="")
        embed_provider = make_provider(embed_cfg)
        generation = None
        if not offline and cfg.generation.kind != LOCAL_EXTRACTIVE:
            generation = RemoteChatProvider(
                endpoint=cfg.generation.endpoint,
                model=cfg.generation.model,
                api_key=cfg.generation.api_key,
                timeout_s=cfg.generation.timeout_s,
            )
        if index is None:
            index = build_index(store, embed_provider)
        return cls(
            store=store,
            index=index,
            embed_provider=embed_provider,
            generation_provider=generation,
            retrieval=cfg.retrieval,
        )

    def retrieve(self, req: QueryRequest) -> tuple[list[ScoredHit], RetrievalStats]:
        flt = Filter.build(whom=req.whom, about=req.about)
        query_vec = self.embed_provider.embed_batch([req.question])[0]
        hits = self.index.top_k(query_vec, k=req.k, flt=flt)
        # diversity bounds apply only when the caller did not pin countries
        if flt.country is None:
            reranked = rerank_diverse(
                hits,
                country_cap=self.retrieval.country_cap,
                target=self.retrieval.rerank_target,
                language_cap=self.retrieval.language_cap or None,
            )
        else:
            reranked = hits
        stats = RetrievalStats(
            candidates=len(self.index),
            after_filter=self.index.count_matching(flt),
            after_rerank=len(reranked),
        )
        return reranked, stats

    def answer(self, req: QueryRequest) -> tuple[StructuredAnswer, RetrievalStats]:
        language = req.answer_language or detect_language(req.question)
        if language == UNKNOWN:
            language = "en"
        hits, stats = self.retrieve(req)

        verdict = check_sufficiency(
            hits,
            min_score=self.retrieval.min_score,
            min_hits=self.retrieval.min_hits,
        )
        if not verdict.sufficient:
            return refusal(verdict.reason or "insufficient", language), stats

        evidence = build_evidence(
            hits,
            lookup=self.store.get,
            budget_chars=self.retrieval.evidence_budget_chars,
        )
        req = req.model_copy(update={"answer_language": language})
        if self.generation_provider is not None:
            answer = generate_answer(req, evidence, self.generation_provider)
        else:
            answer = extractive_answer(req, evidence)
        if answer.answer_language != language:
            answer = localize(answer, language, self.translation_provider)
        return answer, stats
