import json
import threading
from http.server import ThreadingHTTPServer

import pytest
import yaml
from click.testing import CliRunner

from civicqa.cli import main

from conftest import FIXTURE_CORPUS
from test_client import MockPortal, make_items
from test_import import make_line, write_dump


@pytest.fixture()
def runner():
    return CliRunner()


def test_ingest_import_clean_dump_exits_zero(runner, tmp_path):
    dump = write_dump(tmp_path / "dump.jsonl", [make_line(i) for i in range(5)])
    store = tmp_path / "corpus.jsonl"
    result = runner.invoke(main, ["ingest", "import", "--file", str(dump), "--store", str(store)])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output.strip().splitlines()[-1])
    assert report["accepted"] == 5
    assert store.exists()


def test_ingest_import_partial_rejection_exits_two(runner, tmp_path):
    dump = write_dump(tmp_path / "dump.jsonl", [make_line(0), "broken json"])
    store = tmp_path / "corpus.jsonl"
    result = runner.invoke(main, ["ingest", "import", "--file", str(dump), "--store", str(store)])
    assert result.exit_code == 2
    report = json.loads(result.output.strip().splitlines()[-1])
    assert report["rejected"] == 1


def test_ingest_import_missing_file_is_fatal(runner, tmp_path):
    result = runner.invoke(
        main, ["ingest", "import", "--file", str(tmp_path / "nope.jsonl"), "--store", str(tmp_path / "c.jsonl")]
    )
    assert result.exit_code == 2  # click's own usage error for a missing path
    assert "does not exist" in result.output


def test_index_build_and_stats(runner, tmp_path):
    out = tmp_path / "index.civiq"
    result = runner.invoke(
        main,
        ["index", "build", "--corpus", str(FIXTURE_CORPUS), "--out", str(out)],
        env={"CIVICQA_EMBED_DIM": "64"},
    )
    assert result.exit_code == 0, result.output
    assert out.exists()
    stats = runner.invoke(main, ["index", "stats", "--index", str(out)])
    assert stats.exit_code == 0
    body = json.loads(stats.output)
    assert body["count"] == 1040
    assert body["dim"] == 64


def test_index_stats_rejects_garbage_file(runner, tmp_path):
    bogus = tmp_path / "bogus.civiq"
    bogus.write_bytes(b"garbage bytes")
    result = runner.invoke(main, ["index", "stats", "--index", str(bogus)])
    assert result.exit_code == 1
    assert "magic" in result.output


def test_query_offline_three_part_answer(runner):
    result = runner.invoke(
        main,
        [
            "query",
            "--offline",
            "--corpus", str(FIXTURE_CORPUS),
            "--question", "What do citizens think about dynamic electricity tariffs?",
        ],
        env={"CIVICQA_EMBED_DIM": "256"},
    )
    assert result.exit_code == 0, result.output
    answer = json.loads(result.output)
    assert answer["insufficient_evidence"] is False
    assert answer["overview"]
    assert answer["group_insights"]
    assert 2 <= len(answer["recommendations"]) <= 3
    assert answer["sources"]


def test_query_offline_is_byte_stable(runner):
    args = [
        "query", "--offline",
        "--corpus", str(FIXTURE_CORPUS),
        "--question", "What do citizens think about dynamic electricity tariffs?",
    ]
    env = {"CIVICQA_EMBED_DIM": "256"}
    first = runner.invoke(main, args, env=env)
    second = runner.invoke(main, args, env=env)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes


def test_query_gibberish_refuses(runner):
    result = runner.invoke(
        main,
        ["query", "--offline", "--corpus", str(FIXTURE_CORPUS), "--question", "xqzv wjkp qyzx"],
        env={"CIVICQA_EMBED_DIM": "256"},
    )
    assert result.exit_code == 0
    answer = json.loads(result.output)
    assert answer["insufficient_evidence"] is True
    assert answer["sources"] == []


def test_query_with_filters_and_stats(runner):
    result = runner.invoke(
        main,
        [
            "query", "--offline",
            "--corpus", str(FIXTURE_CORPUS),
            "--question", "What do NGOs say about cycling lanes?",
            "--whom", "ngo", "--about", "transport", "--k", "5", "--stats",
        ],
        env={"CIVICQA_EMBED_DIM": "256"},
    )
    assert result.exit_code == 0, result.output
    answer = json.loads(result.output.splitlines()[0])
    assert all(s["stakeholder_group"] == "ngo" for s in answer["sources"])


def test_query_missing_corpus_is_fatal(runner, tmp_path):
    result = runner.invoke(
        main,
        ["query", "--offline", "--corpus", str(tmp_path / "nope.jsonl"), "--question", "hi"],
    )
    assert result.exit_code == 2
    assert "does not exist" in result.output


def test_ingest_fetch_writes_dump(runner, tmp_path):
    server = ThreadingHTTPServer(("127.0.0.1", 0), MockPortal)
    threading.Thread(target=server.serve_forever, daemon=True).start()
    MockPortal.items = make_items(12)
    MockPortal.fail_pages = {}
    MockPortal.hits = []
    try:
        config = tmp_path / "config.yaml"
        config.write_text(
            yaml.safe_dump(
                {"remote_source": {"base_url": f"http://127.0.0.1:{server.server_address[1]}"}}
            )
        )
        out = tmp_path / "dump.jsonl"
        result = runner.invoke(
            main,
            ["ingest", "fetch", "--initiative", "X", "--out", str(out), "--config", str(config)],
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 12
        record = json.loads(lines[0])
        assert record["initiative_id"] == "X"
        assert record["initiative_title"] == "Mock initiative"
        assert record["stakeholder_group"] == "citizen"
    finally:
        server.shutdown()
        server.server_close()


def test_ingest_fetch_partial_rejection_exits_two(runner, tmp_path):
    server = ThreadingHTTPServer(("127.0.0.1", 0), MockPortal)
    threading.Thread(target=server.serve_forever, daemon=True).start()
    MockPortal.items = make_items(4)
    MockPortal.items[2]["text"] = "   "  # one submission rejects in normalize
    MockPortal.fail_pages = {}
    try:
        config = tmp_path / "config.yaml"
        config.write_text(
            yaml.safe_dump(
                {"remote_source": {"base_url": f"http://127.0.0.1:{server.server_address[1]}"}}
            )
        )
        out = tmp_path / "dump.jsonl"
        result = runner.invoke(
            main,
            ["ingest", "fetch", "--initiative", "X", "--out", str(out), "--config", str(config)],
        )
        assert result.exit_code == 2
        assert len(out.read_text().strip().splitlines()) == 3
    finally:
        server.shutdown()
        server.server_close()


def test_ingest_fetch_not_found_is_fatal(runner, tmp_path):
    server = ThreadingHTTPServer(("127.0.0.1", 0), MockPortal)
    threading.Thread(target=server.serve_forever, daemon=True).start()
    try:
        config = tmp_path / "config.yaml"
        config.write_text(
            yaml.safe_dump(
                {"remote_source": {"base_url": f"http://127.0.0.1:{server.server_address[1]}"}}
            )
        )
        result = runner.invoke(
            main, ["ingest", "fetch", "--initiative", "missing", "--config", str(config)]
        )
        assert result.exit_code == 1
        assert "not found" in result.output.lower() or "no such" in result.output.lower()
    finally:
        server.shutdown()
        server.server_close()
