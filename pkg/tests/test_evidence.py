import pytest
from hypothesis import given
from hypothesis import strategies as st

from civicqa.engine.evidence import (
    build_evidence,
    check_sufficiency,
    excerpt,
    sentence_prefix,
    split_sentences,
)
from civicqa.index import ScoredHit

from conftest import make_record


def hits_and_lookup(texts):
    records = {}
    hits = []
    for i, text in enumerate(texts):
        record = make_record(text, source_id=f"s{i}")
        records[record.record_id] = record
        hits.append(
            ScoredHit(record_id=record.record_id, score=1.0 - i * 0.05, rank=i + 1, meta={})
        )
    return hits, records.get


def sentences(count, stem):
    return " ".join(f"{stem} sentence number {i} says something useful." for i in range(count))


def test_under_budget_includes_everything():
    hits, lookup = hits_and_lookup([sentences(8, f"doc{i}") for i in range(6)])
    bundle = build_evidence(hits, lookup, budget_chars=12000)
    assert len(bundle.items) == 6
    assert not bundle.truncation_applied
    assert all(not item.truncated for item in bundle.items)


def test_known_sizes_fixture_packs_three_of_six():
    # six records of exactly 4000 characters; 12 kB budget fits three
    text = sentences(80, "topic")
    filler = text + "x" * (4000 - len(text) - 1) + "."
    assert len(filler) == 4000
    hits, lookup = hits_and_lookup([f"{filler[:-len(str(i))-1]} {i}" for i in range(6)])
    bundle = build_evidence(hits, lookup, budget_chars=12000)
    assert len(bundle.items) == 3
    assert bundle.truncation_applied
    total = sum(len(item.text) for item in bundle.items)
    assert total <= 12000


def test_empty_hits_empty_bundle():
    bundle = build_evidence([], lambda _: None, budget_chars=12000)
    assert bundle.items == ()
    assert not bundle.truncation_applied


def test_overflowing_hit_cut_at_sentence_boundary():
    long_text = sentences(100, "alpha")
    short = "Short remark."
    hits, lookup = hits_and_lookup([short, long_text])
    budget = len(short) + 200
    bundle = build_evidence(hits, lookup, budget_chars=budget)
    assert len(bundle.items) == 2
    cut = bundle.items[1]
    assert cut.truncated
    assert cut.text in long_text  # prefix at sentence granularity
    assert cut.text.endswith(".")
    assert len(short) + len(cut.text) <= budget
    assert bundle.truncation_applied


def test_rank_one_is_never_dropped():
    long_text = sentences(100, "beta")
    hits, lookup = hits_and_lookup([long_text])
    bundle = build_evidence(hits, lookup, budget_chars=50)
    assert len(bundle.items) == 1
    assert bundle.items[0].truncated
    assert bundle.truncation_applied


@given(
    lengths=st.lists(st.integers(1, 30), min_size=1, max_size=8),
    budget=st.integers(50, 2000),
)
def test_budget_is_never_exceeded(lengths, budget):
    texts = [sentences(n, f"t{i}") for i, n in enumerate(lengths)]
    hits, lookup = hits_and_lookup(texts)
    bundle = build_evidence(hits, lookup, budget_chars=budget)
    total = sum(len(item.text) for item in bundle.items)
    if len(bundle.items) > 1 or not bundle.items or not bundle.items[0].truncated:
        assert total <= budget
    # packing is in rank order: items are a prefix of hits
    got_ids = [item.record.record_id for item in bundle.items]
    assert got_ids == [h.record_id for h in hits[: len(got_ids)]]


def test_split_and_prefix_helpers():
    text = "One sentence. Two sentences! Three? Four."
    assert split_sentences(text) == ["One sentence.", "Two sentences!", "Three?", "Four."]
    assert sentence_prefix(text, 13) == "One sentence."
    assert sentence_prefix(text, 12) == ""
    assert sentence_prefix(text, 28) == "One sentence. Two sentences!"
    assert excerpt("x" * 500, 100) == "x" * 100


def test_sufficiency_rule():
    def hits_with(scores):
        return [ScoredHit(f"r{i}", s, i + 1, {}) for i, s in enumerate(scores)]

    verdict = check_sufficiency(hits_with([0.6, 0.4, 0.1]))
    assert verdict.sufficient and verdict.qualifying_hits == 2

    verdict = check_sufficiency(hits_with([0.2, 0.1]))
    assert not verdict.sufficient
    assert verdict.reason == "low_score"

    verdict = check_sufficiency([])
    assert not verdict.sufficient
    assert verdict.reason == "no_hits"

    # thresholds are configuration, not constants
    assert check_sufficiency(hits_with([0.2, 0.2]), min_score=0.15).sufficient
    assert not check_sufficiency(hits_with([0.9]), min_hits=2).sufficient
    assert check_sufficiency(hits_with([0.9]), min_hits=1).sufficient


def test_missing_record_raises():
    hits = [ScoredHit("ghost", 0.9, 1, {})]
    with pytest.raises(KeyError):
        build_evidence(hits, lambda _: None)
