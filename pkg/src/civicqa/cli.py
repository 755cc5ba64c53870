"""Command-line interface: ingest, index, query, serve."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .config import AppConfig, load_config
from .embedding import make_provider
from .engine import QueryRequest
from .errors import CivicQAError
from .index import VectorIndex
from .ingest import CorpusStore, FeedbackClient, import_dump, normalize
from .ingest.normalize import Rejection
from .pipeline import AnswerPipeline, build_index
from .records import IngestReport

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_PARTIAL = 2


def _config(path: str | None) -> AppConfig:
    return load_config(path)


def _load_corpus(path: Path) -> CorpusStore:
    """Read a corpus file: canonical store lines and raw dump lines both work."""
    store = CorpusStore()
    report = import_dump(path, store)
    if report.rejected:
        click.echo(
            f"warning: {report.rejected} unreadable lines in {path}", err=True
        )
    return store


def _report_exit(report: IngestReport) -> int:
    return EXIT_OK if report.rejected == 0 else EXIT_PARTIAL


@click.group()
def main() -> None:
    """Semantic search and grounded answers over consultation feedback."""


@main.group()
def ingest() -> None:
    """Acquire and normalize feedback."""


@ingest.command("fetch")
@click.option("--initiative", required=True, help="Initiative id on the remote source.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Dump file to write (default: stdout).")
@click.option("--page-size", default=50, show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def ingest_fetch(initiative: str, out: str | None, page_size: int, config_path: str | None) -> None:
    """Fetch all feedback for an initiative and write a corpus dump."""
    cfg = _config(config_path)
    if not cfg.remote_source.base_url:
        raise click.ClickException("no remote_source.base_url configured")
    report = IngestReport()
    lines: list[str] = []
    try:
        with FeedbackClient(
            cfg.remote_source.base_url,
            timeout_s=cfg.remote_source.timeout_s,
            parallelism=cfg.remote_source.parallelism,
        ) as client:
            meta = client.initiative_meta(initiative)
            for raw in client.fetch_initiative_feedback(initiative, page_size=page_size):
                report.fetched += 1
                result = normalize(raw, meta)
                if isinstance(result, Rejection):
                    report.reject(result.reason)
                    continue
                report.accepted += 1
                lines.append(json.dumps(result.to_dict(), sort_keys=True))
    except CivicQAError as exc:
        raise click.ClickException(str(exc)) from exc
    body = "\n".join(lines) + ("\n" if lines else "")
    if out:
        Path(out).write_text(body, encoding="utf-8")
    else:
        click.echo(body, nl=False)
    report.check()
    click.echo(f"fetched={report.fetched} accepted={report.accepted} rejected={report.rejected}", err=True)
    sys.exit(_report_exit(report))


@ingest.command("import")
@click.option("--file", "file_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--store", "store_path", type=click.Path(dir_okay=False), default=None, help="Corpus store path (default from config).")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def ingest_import(file_path: str, store_path: str | None, config_path: str | None) -> None:
    """Import a dump file into the corpus store."""
    cfg = _config(config_path)
    target = Path(store_path or cfg.paths.corpus)
    store = CorpusStore.load(target) if target.exists() else CorpusStore()
    try:
        report = import_dump(file_path, store, store_path=target)
    except OSError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(json.dumps(report.to_dict(), sort_keys=True))
    sys.exit(_report_exit(report))


@main.group()
def index() -> None:
    """Build and inspect the vector index."""


@index.command("build")
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def index_build(corpus_path: str | None, out_path: str | None, config_path: str | None) -> None:
    """Embed the corpus store and persist the index."""
    cfg = _config(config_path)
    source = Path(corpus_path or cfg.paths.corpus)
    if not source.exists():
        raise click.ClickException(f"corpus not found: {source}")
    store = _load_corpus(source)
    provider = make_provider(cfg.embedding)
    ix = build_index(store, provider)
    target = Path(out_path or cfg.paths.index)
    ix.save(target)
    click.echo(f"indexed {len(ix)} records at dim {ix.dim} -> {target}")


@index.command("stats")
@click.option("--index", "index_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def index_stats(index_path: str | None, config_path: str | None) -> None:
    cfg = _config(config_path)
    target = Path(index_path or cfg.paths.index)
    try:
        ix = VectorIndex.load(target)
    except (OSError, CivicQAError) as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(json.dumps({"path": str(target), "dim": ix.dim, "count": len(ix)}, sort_keys=True))


@main.command("query")
@click.option("--question", required=True)
@click.option("--whom", multiple=True, help="Stakeholder group filter; repeatable.")
@click.option("--about", multiple=True, help="Topic filter; repeatable.")
@click.option("--k", type=int, default=None)
@click.option("--language", default=None, help="Answer language (EU code).")
@click.option("--offline", is_flag=True, help="Force local providers; no network.")
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--index", "index_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--stats", "show_stats", is_flag=True, help="Print retrieval stats to stderr.")
def query(question, whom, about, k, language, offline, corpus_path, index_path, config_path, show_stats) -> None:
    """Answer a question over the corpus; prints the answer as JSON."""
    cfg = _config(config_path)
    source = Path(corpus_path or cfg.paths.corpus)
    if not source.exists():
        raise click.ClickException(f"corpus not found: {source}")
    store = _load_corpus(source)
    prebuilt = None
    if index_path:
        prebuilt = VectorIndex.load(index_path, expect_dim=cfg.embedding.dim)
    try:
        pipeline = AnswerPipeline.from_config(cfg, store, index=prebuilt, offline=offline)
        request = QueryRequest(
            question=question,
            whom=list(whom),
            about=list(about),
            k=k or cfg.retrieval.k,
            answer_language=language,
        )
        answer, stats = pipeline.answer(request)
    except CivicQAError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(json.dumps(answer.model_dump(), sort_keys=True, ensure_ascii=False))
    if show_stats:
        click.echo(
            f"candidates={stats.candidates} after_filter={stats.after_filter} "
            f"after_rerank={stats.after_rerank}",
            err=True,
        )


@main.command("serve")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(config_path: str | None, host: str, port: int) -> None:
    """Run the HTTP API."""
    import uvicorn

    from .service import create_app

    cfg = _config(config_path)
    source = Path(cfg.paths.corpus)
    pipeline = None
    if source.exists():
        store = _load_corpus(source)
        index_file = Path(cfg.paths.index)
        prebuilt = (
            VectorIndex.load(index_file, expect_dim=cfg.embedding.dim)
            if index_file.exists()
            else None
        )
        pipeline = AnswerPipeline.from_config(cfg, store, index=prebuilt)
    uvicorn.run(create_app(pipeline), host=host, port=port)


if __name__ == "__main__":
    main()
