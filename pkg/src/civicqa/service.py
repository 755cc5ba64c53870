"""HTTP API over the answer pipeline.

Endpoints: POST /api/query, GET /api/filters, POST /api/session/new,
GET /api/initiatives, GET /healthz. Request/response schemas are
documented in docs/api.md. Client mistakes are 400 with the valid
vocabulary attached; provider outages are 503 with Retry-After;
generation contract violations are 500.
"""
from __future__ import annotations

import time
import uuid

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .engine import QueryRequest, StructuredAnswer
from .errors import GenerationContractError, ProviderUnavailableError
from .pipeline import AnswerPipeline
from .records import EU_LANGUAGES, STAKEHOLDER_GROUPS


class ApiQuery(BaseModel):
    question: str = Field(min_length=1, max_length=2000)
    whom: list[str] = Field(default_factory=list)
    about: list[str] = Field(default_factory=list)
    k: int | None = Field(default=None, ge=1, le=1000)
    language: str | None = None
    session_id: str | None = None


class RetrievalStatsBody(BaseModel):
    candidates: int
    after_filter: int
    after_rerank: int


class ApiAnswer(StructuredAnswer):
    query_echo: ApiQuery
    k_used: int
    retrieval_stats: RetrievalStatsBody
    timing_ms: float


class SessionBody(BaseModel):
    session_id: str


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message, **extra})


def create_app(pipeline: AnswerPipeline | None = None) -> FastAPI:
    app = FastAPI(title="civicqa", docs_url=None, redoc_url=None)
    app.state.pipeline = pipeline

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error(400, "invalid request", detail=exc.errors())

    @app.exception_handler(ProviderUnavailableError)
    async def on_provider_down(request: Request, exc: ProviderUnavailableError):
        response = _error(503, str(exc))
        response.headers["Retry-After"] = str(int(exc.retry_after_s) or 5)
        return response

    @app.exception_handler(GenerationContractError)
    async def on_contract_error(request: Request, exc: GenerationContractError):
        return _error(500, str(exc), violations=exc.violations)

    def ready() -> AnswerPipeline | None:
        return app.state.pipeline

    @app.post("/api/query")
    def api_query(body: ApiQuery):
        pipeline = ready()
        if pipeline is None:
            return _error(503, "corpus not loaded")

        invalid_whom = sorted(set(body.whom) - set(STAKEHOLDER_GROUPS))
        if invalid_whom:
            return _error(
                400,
                f"unknown stakeholder groups: {invalid_whom}",
                valid_whom=sorted(STAKEHOLDER_GROUPS),
            )
        topics = pipeline.store.distinct("topic")
        invalid_about = sorted(set(body.about) - set(topics))
        if invalid_about:
            return _error(
                400,
                f"unknown topics: {invalid_about}",
                valid_about=topics,
            )
        if body.language is not None and body.language not in EU_LANGUAGES:
            return _error(
                400,
                f"unknown language: {body.language}",
                valid_languages=sorted(EU_LANGUAGES),
            )

        k = body.k or pipeline.retrieval.k
        request = QueryRequest(
            question=body.question,
            whom=body.whom,
            about=body.about,
            k=k,
            answer_language=body.language,
        )
        started = time.perf_counter()
        answer, stats = pipeline.answer(request)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return ApiAnswer(
            **answer.model_dump(),
            query_echo=body,
            k_used=k,
            retrieval_stats=RetrievalStatsBody(
                candidates=stats.candidates,
                after_filter=stats.after_filter,
                after_rerank=stats.after_rerank,
            ),
            timing_ms=round(elapsed_ms, 3),
        )

    @app.get("/api/filters")
    def api_filters():
        pipeline = ready()
        if pipeline is None:
            return _error(503, "corpus not loaded")
        store = pipeline.store
        return {
            "whom": store.distinct("stakeholder_group"),
            "about": store.distinct("topic"),
            "countries": store.distinct("country"),
            "languages": store.distinct("language"),
        }

    @app.post("/api/session/new")
    def api_session_new():
        # Single-turn engine: sessions anchor UI state only, nothing is
        # remembered server-side.
        return SessionBody(session_id=uuid.uuid4().hex)

    @app.get("/api/initiatives")
    def api_initiatives():
        pipeline = ready()
        if pipeline is None:
            return _error(503, "corpus not loaded")
        return pipeline.store.initiative_summary()

    @app.get("/healthz")
    def healthz():
        pipeline = ready()
        if pipeline is None:
            return {"status": "degraded", "reason": "corpus not loaded"}
        return {
            "status": "ok",
            "corpus_records": len(pipeline.store),
            "index_dim": pipeline.index.dim,
            "index_count": len(pipeline.index),
            "providers": {
                "embedding": pipeline.embed_provider.cfg.kind,
                "generation": (
                    "remote_http" if pipeline.generation_provider else "local_extractive"
                ),
            },
        }

    return app
