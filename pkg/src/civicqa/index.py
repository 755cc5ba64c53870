"""Exact cosine top-K index with metadata filtering and persistence.

A full scan over an (N, dim) float64 matrix: at consultation scale
(10^3..10^5 records) exactness is cheap, and behavior stays equal to a
brute-force oracle, tie-breaks included. Scores are plain dot products
because every vector is unit-norm on entry.

Readers take an immutable compiled snapshot; upserts invalidate it under
a lock, so a query never observes a half-applied write.
"""
from __future__ import annotations

import json
import struct
import threading
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, IndexFormatError

FORMAT_VERSION = 1
_MAGIC = b"CIVIQIDX"

META_FIELDS = (
    "initiative_id",
    "topic",
    "stakeholder_group",
    "country",
    "language",
    "submitted_at",
)


@dataclass(frozen=True)
class IndexedChunk:
    record_id: str
    vector: np.ndarray
    meta: dict[str, str]
    truncated: bool = False


@dataclass(frozen=True)
class Filter:
    """Absent/empty fields constrain nothing."""

    whom: frozenset[str] | None = None
    about: frozenset[str] | None = None
    country: frozenset[str] | None = None
    language: frozenset[str] | None = None
    initiative: frozenset[str] | None = None

    @classmethod
    def build(cls, whom=None, about=None, country=None, language=None, initiative=None) -> "Filter":
        def norm(values):
            values = frozenset(values) if values else None
            return values or None

        return cls(norm(whom), norm(about), norm(country), norm(language), norm(initiative))

    def is_empty(self) -> bool:
        return all(
            f is None
            for f in (self.whom, self.about, self.country, self.language, self.initiative)
        )

    def matches(self, meta: dict[str, str]) -> bool:
        return (
            (self.whom is None or meta.get("stakeholder_group") in self.whom)
            and (self.about is None or meta.get("topic") in self.about)
            and (self.country is None or meta.get("country") in self.country)
            and (self.language is None or meta.get("language") in self.language)
            and (self.initiative is None or meta.get("initiative_id") in self.initiative)
        )


@dataclass(frozen=True)
class ScoredHit:
    record_id: str
    score: float
    rank: int
    meta: dict[str, str] = field(default_factory=dict)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; for unit vectors this is the dot product."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        raise ValueError("cosine undefined for zero vectors")
    return float(np.dot(a, b) / (na * nb))


class _Snapshot:
    """Immutable compiled view the scan runs against."""

    __slots__ = ("ids", "matrix", "meta", "truncated", "columns")

    def __init__(self, ids, matrix, meta, truncated):
        self.ids = ids          # np.ndarray of str
        self.matrix = matrix    # (N, dim) float64
        self.meta = meta        # list[dict]
        self.truncated = truncated
        # per-field string arrays for vectorized filtering
        self.columns = {
            name: np.asarray([m.get(name, "") for m in meta], dtype=object)
            for name in META_FIELDS
        }

    def mask(self, flt: Filter) -> np.ndarray:
        mask = np.ones(len(self.meta), dtype=bool)
        for values, column in (
            (flt.whom, "stakeholder_group"),
            (flt.about, "topic"),
            (flt.country, "country"),
            (flt.language, "language"),
            (flt.initiative, "initiative_id"),
        ):
            if values is not None:
                mask &= np.isin(self.columns[column], list(values))
        return mask


class VectorIndex:
    def __init__(self, dim: int):
        if dim < 1:
            raise ConfigurationError("index dim must be positive")
        self.dim = dim
        self._chunks: dict[str, IndexedChunk] = {}
        self._lock = threading.Lock()
        self._snapshot: _Snapshot | None = None

    def __len__(self) -> int:
        return len(self._chunks)

    def upsert(self, chunk: IndexedChunk) -> None:
        vec = np.asarray(chunk.vector, dtype=np.float64)
        if vec.shape != (self.dim,):
            raise ConfigurationError(
                f"vector dim {vec.shape} does not match index dim {self.dim}"
            )
        if not np.all(np.isfinite(vec)):
            raise ValueError("vector entries must be finite")
        meta = {name: str(chunk.meta.get(name, "")) for name in META_FIELDS}
        stored = replace(chunk, vector=vec, meta=meta)
        with self._lock:
            self._chunks[chunk.record_id] = stored
            self._snapshot = None

    def _snap(self) -> _Snapshot:
        with self._lock:
            if self._snapshot is None:
                chunks = list(self._chunks.values())
                # unicode dtype, not object: lexsort needs real string order
                ids = np.asarray([c.record_id for c in chunks], dtype=str)
                matrix = (
                    np.stack([c.vector for c in chunks])
                    if chunks
                    else np.zeros((0, self.dim), dtype=np.float64)
                )
                self._snapshot = _Snapshot(
                    ids,
                    matrix,
                    [c.meta for c in chunks],
                    [c.truncated for c in chunks],
                )
            return self._snapshot

    def count_matching(self, flt: Filter | None = None) -> int:
        snap = self._snap()
        if flt is None or flt.is_empty():
            return len(snap.meta)
        return int(snap.mask(flt).sum())

    def top_k(self, query_vec: np.ndarray, k: int, flt: Filter | None = None) -> list[ScoredHit]:
        """Exact filtered top-k; filter applies before the cut to k."""
        if k < 1:
            raise ValueError("k must be >= 1")
        query = np.asarray(query_vec, dtype=np.float64)
        if query.shape != (self.dim,):
            raise ConfigurationError(
                f"query dim {query.shape} does not match index dim {self.dim}"
            )
        snap = self._snap()
        if len(snap.meta) == 0:
            return []
        if flt is None or flt.is_empty():
            candidates = np.arange(len(snap.meta))
        else:
            candidates = np.nonzero(snap.mask(flt))[0]
            if candidates.size == 0:
                return []
        # einsum, not BLAS matmul: identical rows must score bit-identically
        # regardless of row position, or the id tie-break stops being real
        scores = np.einsum("ij,j->i", snap.matrix[candidates], query)
        # descending score, ties by record_id ascending: reproducible
        # answers, and the reason selection can be explained at all
        order = np.lexsort((snap.ids[candidates], -scores))[:k]
        hits = []
        for rank, pos in enumerate(order, start=1):
            idx = int(candidates[pos])
            hits.append(
                ScoredHit(
                    record_id=str(snap.ids[idx]),
                    score=float(scores[pos]),
                    rank=rank,
                    meta=dict(snap.meta[idx]),
                )
            )
        return hits

    def save(self, path: str | Path) -> None:
        snap = self._snap()
        header = json.dumps(
            {
                "format_version": FORMAT_VERSION,
                "dim": self.dim,
                "count": len(snap.meta),
            }
        ).encode("utf-8")
        tail = json.dumps(
            {
                "ids": [str(i) for i in snap.ids],
                "meta": snap.meta,
                "truncated": snap.truncated,
            }
        ).encode("utf-8")
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as fh:
            fh.write(_MAGIC)
            fh.write(struct.pack("<II", FORMAT_VERSION, len(header)))
            fh.write(header)
            fh.write(np.ascontiguousarray(snap.matrix, dtype="<f8").tobytes())
            fh.write(tail)

    @classmethod
    def load(cls, path: str | Path, expect_dim: int | None = None) -> "VectorIndex":
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob[: len(_MAGIC)] != _MAGIC:
            raise IndexFormatError(f"{path}: not an index file (bad magic)")
        version, header_len = struct.unpack_from("<II", blob, len(_MAGIC))
        if version != FORMAT_VERSION:
            raise IndexFormatError(
                f"{path}: unsupported format version {version} (expected {FORMAT_VERSION})"
            )
        offset = len(_MAGIC) + 8
        header = json.loads(blob[offset : offset + header_len])
        offset += header_len
        dim, count = int(header["dim"]), int(header["count"])
        if expect_dim is not None and dim != expect_dim:
            raise IndexFormatError(
                f"{path}: index dim {dim} does not match configured dim {expect_dim}"
            )
        vec_bytes = count * dim * 8
        matrix = np.frombuffer(blob[offset : offset + vec_bytes], dtype="<f8")
        if matrix.size != count * dim:
            raise IndexFormatError(f"{path}: truncated vector block")
        matrix = matrix.reshape(count, dim)
        try:
            tail = json.loads(blob[offset + vec_bytes :])
        except json.JSONDecodeError as exc:
            raise IndexFormatError(f"{path}: corrupt metadata block: {exc}") from exc
        index = cls(dim)
        for i in range(count):
            index.upsert(
                IndexedChunk(
                    record_id=tail["ids"][i],
                    vector=matrix[i],
                    meta=tail["meta"][i],
                    truncated=bool(tail["truncated"][i]),
                )
            )
        return index
