"""HTTP client for a consultation-portal feedback API.

Wire contract (documented in docs/api.md):

    GET {base}/initiatives/{id}                      -> initiative metadata
    GET {base}/initiatives/{id}/feedback?page=P&size=S
        -> {"total": int, "items": [submission, ...]}

Pages are 1-based. A 404 on either endpoint is a definitive not-found;
transport errors and 5xx responses surface as FetchError carrying the
page cursor so the caller can resume.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import httpx

from ..errors import FetchError, InitiativeNotFoundError
from ..records import InitiativeMeta, RawSubmission

RETRIES_PER_PAGE = 3


class FeedbackClient:
    def __init__(
        self,
        base_url: str,
        timeout_s: float = 10.0,
        parallelism: int = 4,
        retry_wait_s: float = 0.5,
        transport: httpx.BaseTransport | None = None,
    ):
        self._client = httpx.Client(
            base_url=base_url.rstrip("/"),
            timeout=timeout_s,
            transport=transport,
        )
        self._parallelism = max(1, parallelism)
        self._retry_wait_s = retry_wait_s

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "FeedbackClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def initiative_meta(self, initiative_id: str) -> InitiativeMeta:
        data = self._get_json(f"/initiatives/{initiative_id}", {}, page=0)
        return InitiativeMeta(
            initiative_id=initiative_id,
            initiative_title=data.get("title", ""),
            topic=data.get("topic", ""),
        )

    def fetch_initiative_feedback(
        self, initiative_id: str, page_size: int = 50, start_page: int = 1
    ) -> Iterator[RawSubmission]:
        """Yield every submission for an initiative, in source order."""
        if not initiative_id:
            raise ValueError("initiative_id must be non-empty")
        if page_size < 1:
            raise ValueError("page_size must be positive")

        first = self._fetch_page(initiative_id, start_page, page_size)
        total = int(first.get("total", len(first["items"])))
        yield from self._to_submissions(initiative_id, first["items"])

        pages = (total + page_size - 1) // page_size
        remaining = list(range(start_page + 1, pages + 1))
        if not remaining:
            return

        with ThreadPoolExecutor(max_workers=self._parallelism) as pool:
            futures = {
                page: pool.submit(self._fetch_page, initiative_id, page, page_size)
                for page in remaining
            }
            for page in remaining:  # yield strictly in source order
                data = futures[page].result()
                yield from self._to_submissions(initiative_id, data["items"])

    def _fetch_page(self, initiative_id: str, page: int, size: int) -> dict:
        return self._get_json(
            f"/initiatives/{initiative_id}/feedback",
            {"page": page, "size": size},
            page=page,
        )

    def _get_json(self, path: str, params: dict, page: int) -> dict:
        last_error: Exception | None = None
        for attempt in range(RETRIES_PER_PAGE):
            try:
                resp = self._client.get(path, params=params)
            except httpx.HTTPError as exc:
                last_error = exc
            else:
                if resp.status_code == 404:
                    raise InitiativeNotFoundError(f"no such resource: {path}")
                if resp.status_code >= 500:
                    last_error = FetchError(
                        f"server error {resp.status_code} on {path}", page=page
                    )
                else:
                    resp.raise_for_status()
                    return resp.json()
            if attempt < RETRIES_PER_PAGE - 1:
                time.sleep(self._retry_wait_s * (2**attempt))
        raise FetchError(f"giving up on {path} after {RETRIES_PER_PAGE} attempts: {last_error}", page=page)

    @staticmethod
    def _to_submissions(initiative_id: str, items: list[dict]) -> Iterator[RawSubmission]:
        for item in items:
            declared = {
                key: str(item[key])
                for key in ("user_type", "organization", "country", "date", "language")
                if item.get(key) is not None
            }
            yield RawSubmission(
                source_id=str(item.get("id", "")) or "missing-id",
                initiative_id=initiative_id,
                payload=item.get("text", "") or "",
                declared_metadata=declared,
            )
