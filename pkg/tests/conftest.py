from __future__ import annotations

import socket
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path

import pytest

from civicqa.embedding import ProviderConfig, make_provider
from civicqa.ingest import CorpusStore, import_dump
from civicqa.pipeline import AnswerPipeline, build_index
from civicqa.records import FeedbackRecord, record_id_for

FIXTURE_CORPUS = Path(__file__).parent / "fixtures" / "corpus.jsonl"


@contextmanager
def forbid_network_sockets():
    """Fail the test if anything opens a network (INET) socket.

    AF_UNIX stays allowed: asyncio test plumbing uses local socketpairs,
    which are IPC, not network access.
    """
    real_socket = socket.socket
    real_create = socket.create_connection

    class GuardedSocket(real_socket):
        def __init__(self, family=socket.AF_INET, *args, **kwargs):
            if family in (socket.AF_INET, socket.AF_INET6):
                raise AssertionError("test attempted to open a network socket")
            super().__init__(family, *args, **kwargs)

    def refuse(*args, **kwargs):
        raise AssertionError("test attempted an outbound connection")

    socket.socket = GuardedSocket
    socket.create_connection = refuse
    try:
        yield
    finally:
        socket.socket = real_socket
        socket.create_connection = real_create


def make_record(
    text: str,
    initiative_id: str = "init-a",
    source_id: str | None = None,
    initiative_title: str = "Initiative A",
    topic: str = "energy",
    stakeholder_group: str = "citizen",
    organization_name: str | None = None,
    country: str = "DE",
    language: str = "en",
    submitted_at: datetime | None = None,
) -> FeedbackRecord:
    source = source_id if source_id is not None else f"src-{abs(hash(text)) % 10**8}"
    return FeedbackRecord(
        record_id=record_id_for(initiative_id, source, text),
        initiative_id=initiative_id,
        initiative_title=initiative_title,
        topic=topic,
        stakeholder_group=stakeholder_group,
        organization_name=organization_name,
        country=country,
        language=language,
        submitted_at=submitted_at or datetime(2024, 3, 1, tzinfo=timezone.utc),
        text=text,
    )


@pytest.fixture(scope="session")
def fixture_store() -> CorpusStore:
    store = CorpusStore()
    report = import_dump(FIXTURE_CORPUS, store)
    assert report.rejected == 0
    return store


@pytest.fixture(scope="session")
def local_provider():
    return make_provider(ProviderConfig())


@pytest.fixture(scope="session")
def fixture_pipeline(fixture_store, local_provider) -> AnswerPipeline:
    index = build_index(fixture_store, local_provider)
    return AnswerPipeline(fixture_store, index, local_provider)
