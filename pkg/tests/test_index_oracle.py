"""Equivalence of the index with the independent brute-force oracle."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from civicqa.index import Filter, IndexedChunk, VectorIndex

from oracle import (
    FILTER_FIELDS,
    brute_force_top_k,
    random_constraints,
    random_corpus,
    random_unit,
)


def constraints_to_filter(constraints):
    if not constraints:
        return None
    kwargs = {
        name: constraints.get(field)
        for name, field in FILTER_FIELDS.items()
        if constraints.get(field)
    }
    return Filter.build(**kwargs)


def build_index(rows, dim):
    index = VectorIndex(dim)
    for record_id, vec, meta in rows:
        index.upsert(IndexedChunk(record_id=record_id, vector=vec, meta=meta))
    return index


def assert_equivalent(index, rows, query, k, constraints):
    expected = brute_force_top_k(rows, query, k, constraints)
    hits = index.top_k(query, k=k, flt=constraints_to_filter(constraints))
    assert [h.record_id for h in hits] == [record_id for record_id, _ in expected]
    for hit, (_, score) in zip(hits, expected):
        assert abs(hit.score - score) <= 1e-9
    assert [h.rank for h in hits] == list(range(1, len(hits) + 1))


@settings(max_examples=30, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    size=st.integers(1, 120),
    dim=st.sampled_from([8, 16, 64]),
    k=st.integers(1, 30),
)
def test_oracle_equivalence_randomized(seed, size, dim, k):
    rng = np.random.default_rng(seed)
    rows = random_corpus(rng, size, dim, duplicate_share=0.1)
    index = build_index(rows, dim)
    query = random_unit(rng, dim)
    constraints = random_constraints(rng)
    assert_equivalent(index, rows, query, k, constraints)


def test_oracle_equivalence_medium_corpus():
    rng = np.random.default_rng(777)
    rows = random_corpus(rng, 1000, 64, duplicate_share=0.05)
    index = build_index(rows, 64)
    for _ in range(25):
        query = random_unit(rng, 64)
        constraints = random_constraints(rng)
        k = int(rng.integers(1, 40))
        assert_equivalent(index, rows, query, k, constraints)


def test_filter_soundness_and_completeness_sampled():
    rng = np.random.default_rng(778)
    rows = random_corpus(rng, 400, 32)
    index = build_index(rows, 32)
    by_id = {record_id: meta for record_id, _, meta in rows}
    for _ in range(50):
        query = random_unit(rng, 32)
        constraints = random_constraints(rng, include_prob=0.6) or {}
        k = int(rng.integers(1, 20))
        hits = index.top_k(query, k=k, flt=constraints_to_filter(constraints))
        # soundness: every hit satisfies the filter
        for hit in hits:
            meta = by_id[hit.record_id]
            assert all(meta[field] in allowed for field, allowed in constraints.items())
        # completeness: nothing matching scores above the k-th returned hit
        if len(hits) == k:
            floor = hits[-1].score
            returned = {h.record_id for h in hits}
            for record_id, vec, meta in rows:
                if record_id in returned:
                    continue
                if all(meta[field] in allowed for field, allowed in constraints.items()):
                    assert float(np.dot(vec, query)) <= floor + 1e-12
        else:
            matching = sum(
                1
                for _, _, meta in rows
                if all(meta[field] in allowed for field, allowed in constraints.items())
            )
            assert len(hits) == matching
