"""Application configuration: one YAML file, environment overrides win."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .embedding import DEFAULT_DIM, LOCAL_DETERMINISTIC, ProviderConfig
from .errors import ConfigurationError

ENV_PREFIX = "CIVICQA_"

LOCAL_EXTRACTIVE = "local_extractive"
REMOTE_HTTP = "remote_http"


@dataclass
class RemoteSourceConfig:
    base_url: str = ""
    timeout_s: float = 10.0
    parallelism: int = 4


@dataclass
class GenerationConfig:
    kind: str = LOCAL_EXTRACTIVE
    endpoint: str = ""
    model: str = ""
    api_key: str = ""
    timeout_s: float = 60.0


@dataclass
class RetrievalConfig:
    k: int = 8
    min_score: float = 0.25
    min_hits: int = 2
    country_cap: int = 2
    rerank_target: int = 6
    language_cap: int = 0  # 0 = off
    evidence_budget_chars: int = 12000


@dataclass
class PathsConfig:
    corpus: str = "data/corpus.jsonl"
    index: str = "data/index.civiq"


@dataclass
class AppConfig:
    remote_source: RemoteSourceConfig = field(default_factory=RemoteSourceConfig)
    embedding: ProviderConfig = field(default_factory=ProviderConfig)
    generation: GenerationConfig = field(default_factory=GenerationConfig)
    retrieval: RetrievalConfig = field(default_factory=RetrievalConfig)
    paths: PathsConfig = field(default_factory=PathsConfig)


def _apply_env(cfg: AppConfig, env: dict[str, str]) -> AppConfig:
    def get(name: str, cast, current):
        raw = env.get(ENV_PREFIX + name)
        if raw is None:
            return current
        try:
            return cast(raw)
        except ValueError as exc:
            raise ConfigurationError(f"bad env override {ENV_PREFIX}{name}={raw!r}") from exc

    cfg.remote_source.base_url = get("REMOTE_BASE_URL", str, cfg.remote_source.base_url)
    cfg.remote_source.timeout_s = get("REMOTE_TIMEOUT_S", float, cfg.remote_source.timeout_s)
    cfg.remote_source.parallelism = get("REMOTE_PARALLELISM", int, cfg.remote_source.parallelism)

    cfg.embedding = ProviderConfig(
        kind=get("EMBED_KIND", str, cfg.embedding.kind),
        dim=get("EMBED_DIM", int, cfg.embedding.dim),
        batch_size=get("EMBED_BATCH_SIZE", int, cfg.embedding.batch_size),
        endpoint=get("EMBED_ENDPOINT", str, cfg.embedding.endpoint),
        model=get("EMBED_MODEL", str, cfg.embedding.model),
        api_key=get("EMBED_API_KEY", str, cfg.embedding.api_key),
        timeout_s=cfg.embedding.timeout_s,
    )

    cfg.generation.kind = get("GEN_KIND", str, cfg.generation.kind)
    cfg.generation.endpoint = get("GEN_ENDPOINT", str, cfg.generation.endpoint)
    cfg.generation.model = get("GEN_MODEL", str, cfg.generation.model)
    cfg.generation.api_key = get("GEN_API_KEY", str, cfg.generation.api_key)

    cfg.retrieval.k = get("K", int, cfg.retrieval.k)
    cfg.retrieval.min_score = get("MIN_SCORE", float, cfg.retrieval.min_score)
    cfg.retrieval.min_hits = get("MIN_HITS", int, cfg.retrieval.min_hits)
    cfg.retrieval.country_cap = get("COUNTRY_CAP", int, cfg.retrieval.country_cap)
    cfg.retrieval.rerank_target = get("RERANK_TARGET", int, cfg.retrieval.rerank_target)
    cfg.retrieval.language_cap = get("LANGUAGE_CAP", int, cfg.retrieval.language_cap)

    cfg.paths.corpus = get("CORPUS_PATH", str, cfg.paths.corpus)
    cfg.paths.index = get("INDEX_PATH", str, cfg.paths.index)
    return cfg


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> AppConfig:
    """Load config from YAML (all keys optional) and apply env overrides."""
    data: dict = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path}: config root must be a mapping")

    def section(name: str) -> dict:
        value = data.get(name) or {}
        if not isinstance(value, dict):
            raise ConfigurationError(f"{path}: section {name!r} must be a mapping")
        return value

    remote = section("remote_source")
    embed = section("embedding")
    gen = section("generation")
    retr = section("retrieval")
    paths = section("paths")

    cfg = AppConfig(
        remote_source=RemoteSourceConfig(
            base_url=str(remote.get("base_url", "")),
            timeout_s=float(remote.get("timeout_s", 10.0)),
            parallelism=int(remote.get("parallelism", 4)),
        ),
        embedding=ProviderConfig(
            kind=str(embed.get("kind", LOCAL_DETERMINISTIC)),
            dim=int(embed.get("dim", DEFAULT_DIM)),
            batch_size=int(embed.get("batch_size", 64)),
            endpoint=str(embed.get("endpoint", "")),
            model=str(embed.get("model", "")),
            api_key=str(embed.get("api_key", "")),
            timeout_s=float(embed.get("timeout_s", 30.0)),
        ),
        generation=GenerationConfig(
            kind=str(gen.get("kind", LOCAL_EXTRACTIVE)),
            endpoint=str(gen.get("endpoint", "")),
            model=str(gen.get("model", "")),
            api_key=str(gen.get("api_key", "")),
            timeout_s=float(gen.get("timeout_s", 60.0)),
        ),
        retrieval=RetrievalConfig(
            k=int(retr.get("k", 8)),
            min_score=float(retr.get("min_score", 0.25)),
            min_hits=int(retr.get("min_hits", 2)),
            country_cap=int(retr.get("country_cap", 2)),
            rerank_target=int(retr.get("rerank_target", 6)),
            language_cap=int(retr.get("language_cap", 0)),
            evidence_budget_chars=int(retr.get("evidence_budget_chars", 12000)),
        ),
        paths=PathsConfig(
            corpus=str(paths.get("corpus", "data/corpus.jsonl")),
            index=str(paths.get("index", "data/index.civiq")),
        ),
    )
    if cfg.generation.kind not in (LOCAL_EXTRACTIVE, REMOTE_HTTP):
        raise ConfigurationError(f"unknown generation kind: {cfg.generation.kind}")
    return _apply_env(cfg, dict(os.environ) if env is None else env)
