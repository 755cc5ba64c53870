"""Text embedding providers.

Two interchangeable providers sit behind one contract: vectors come back
in input order, with the configured dimension, L2-normalized. The local
provider is a pure function of (text, dim) — character trigrams hashed
into signed buckets — so the whole system runs and tests offline. The
remote provider speaks a generic JSON-over-HTTP embeddings endpoint.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass

import httpx
import numpy as np

from .errors import ConfigurationError, ProviderUnavailableError

DEFAULT_DIM = 1536
MAX_TEXT_CHARS = 8000  # longer feedback is truncated, not chunked
REMOTE_ATTEMPTS = 3

LOCAL_DETERMINISTIC = "local_deterministic"
REMOTE_HTTP = "remote_http"


@dataclass(frozen=True)
class ProviderConfig:
    kind: str = LOCAL_DETERMINISTIC
    dim: int = DEFAULT_DIM
    batch_size: int = 64
    endpoint: str = ""
    model: str = ""
    api_key: str = ""
    timeout_s: float = 30.0
    retry_wait_s: float = 0.5

    def __post_init__(self) -> None:
        if self.kind not in (LOCAL_DETERMINISTIC, REMOTE_HTTP):
            raise ConfigurationError(f"unknown embedding provider kind: {self.kind}")
        if self.dim < 8:
            raise ConfigurationError("embedding dim must be >= 8")
        if self.batch_size < 1:
            raise ConfigurationError("batch_size must be positive")


def local_hash_embed(text: str, dim: int) -> np.ndarray:
    """Deterministic trigram feature-hash embedding, unit L2 norm.

    Similar strings share trigrams and therefore score higher under
    cosine than disjoint strings — enough structure for offline
    retrieval tests and demos.
    """
    if dim < 8:
        raise ValueError("dim must be >= 8")
    if not text:
        raise ValueError("text must be non-empty")
    text = text[:MAX_TEXT_CHARS].lower()
    grams = (
        [text[i : i + 3] for i in range(len(text) - 2)]
        if len(text) >= 3
        else [text]
    )
    vec = np.zeros(dim, dtype=np.float64)
    for gram in grams:
        digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
        value = int.from_bytes(digest, "little")
        bucket = value % dim
        sign = 1.0 if (value >> 63) & 1 else -1.0
        vec[bucket] += sign
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:  # all grams cancelled; keep a valid unit vector
        vec[0] = 1.0
        return vec
    return vec / norm


def _validate_batch(texts: list[str], cfg: ProviderConfig) -> None:
    if len(texts) > cfg.batch_size:
        raise ValueError(
            f"batch of {len(texts)} exceeds batch_size {cfg.batch_size}"
        )
    if any(not t for t in texts):
        raise ValueError("texts must be non-empty")


class LocalDeterministicProvider:
    """Offline provider; safe for concurrent use (no state)."""

    def __init__(self, cfg: ProviderConfig):
        self.cfg = cfg

    def embed_batch(self, texts: list[str]) -> list[np.ndarray]:
        _validate_batch(texts, self.cfg)
        return [local_hash_embed(t, self.cfg.dim) for t in texts]


class RemoteHttpProvider:
    """Generic embeddings-over-HTTP client.

    Request: {"model": ..., "input": [texts]}; response: {"data":
    [{"embedding": [...]}, ...]} in input order. Credentials go in the
    Authorization header and are never logged.
    """

    def __init__(self, cfg: ProviderConfig, transport: httpx.BaseTransport | None = None):
        if not cfg.endpoint:
            raise ConfigurationError("remote embedding provider needs an endpoint")
        self.cfg = cfg
        headers = {}
        if cfg.api_key:
            headers["Authorization"] = f"Bearer {cfg.api_key}"
        self._client = httpx.Client(
            timeout=cfg.timeout_s, headers=headers, transport=transport
        )

    def close(self) -> None:
        self._client.close()

    def embed_batch(self, texts: list[str]) -> list[np.ndarray]:
        _validate_batch(texts, self.cfg)
        payload = {
            "model": self.cfg.model,
            "input": [t[:MAX_TEXT_CHARS] for t in texts],
        }
        last_error: Exception | None = None
        for attempt in range(REMOTE_ATTEMPTS):
            try:
                resp = self._client.post(self.cfg.endpoint, json=payload)
                if resp.status_code >= 500:
                    last_error = ProviderUnavailableError(
                        f"embedding endpoint returned {resp.status_code}"
                    )
                else:
                    resp.raise_for_status()
                    return self._parse(resp.json(), len(texts))
            except (httpx.HTTPError, KeyError, TypeError) as exc:
                last_error = exc
            if attempt < REMOTE_ATTEMPTS - 1:
                time.sleep(self.cfg.retry_wait_s * (2**attempt))
        raise ProviderUnavailableError(
            f"embedding provider failed after {REMOTE_ATTEMPTS} attempts: {last_error}"
        )

    def _parse(self, body: dict, expected: int) -> list[np.ndarray]:
        rows = body["data"]
        if len(rows) != expected:
            raise ProviderUnavailableError(
                f"provider returned {len(rows)} vectors for {expected} texts"
            )
        out = []
        for row in rows:
            vec = np.asarray(row["embedding"], dtype=np.float64)
            if vec.shape != (self.cfg.dim,):
                raise ConfigurationError(
                    f"provider returned dim {vec.shape[0]}, index expects {self.cfg.dim}"
                )
            if not np.all(np.isfinite(vec)):
                raise ProviderUnavailableError("provider returned non-finite values")
            norm = float(np.linalg.norm(vec))
            if norm == 0.0:
                raise ProviderUnavailableError("provider returned a zero vector")
            out.append(vec / norm)
        return out


def make_provider(cfg: ProviderConfig, transport: httpx.BaseTransport | None = None):
    if cfg.kind == REMOTE_HTTP:
        return RemoteHttpProvider(cfg, transport=transport)
    return LocalDeterministicProvider(cfg)


def embed_batch(
    texts: list[str],
    cfg: ProviderConfig,
    transport: httpx.BaseTransport | None = None,
) -> list[np.ndarray]:
    """One-shot batch embedding honoring the provider contract."""
    return make_provider(cfg, transport=transport).embed_batch(texts)


def embed_all(texts: list[str], provider) -> list[np.ndarray]:
    """Embed any number of texts by chunking into provider-sized batches."""
    out: list[np.ndarray] = []
    size = provider.cfg.batch_size
    for start in range(0, len(texts), size):
        out.extend(provider.embed_batch(texts[start : start + size]))
    return out
