"""Benchmark store persistence, tag filtering, and nearest-rank percentiles."""

from __future__ import annotations

import math
import random

import pytest

from quperman.benchmark import (
    BenchmarkStore,
    distribution,
    ingest_entry,
    load_sample_store,
    load_store,
    matching_scores,
    nearest_rank,
    percentile_of,
    save_store,
)
from quperman.errors import EmptyDistributionError, InputError, StoreVersionError


def fill(store, scores, **tags):
    for i, score in enumerate(scores):
        ingest_entry(store, f"p{i:03d}", score, tags or None)


# --- nearest-rank percentiles -----------------------------------------------

def ceil_rank_oracle(sorted_scores, percentile):
    index = max(1, math.ceil(percentile * len(sorted_scores) / 100))
    return sorted_scores[index - 1]


def test_nearest_rank_matches_ceiling_oracle_on_random_arrays():
    rng = random.Random(20260816)
    for _ in range(1000):
        scores = sorted(round(rng.uniform(1, 10), 3) for _ in range(rng.randint(1, 50)))
        for p in (10, 50, 90):
            assert nearest_rank(scores, p) == ceil_rank_oracle(scores, p)


def test_nearest_rank_single_entry_returns_it_everywhere():
    for p in (10, 50, 90):
        assert nearest_rank([4.7], p) == 4.7


def test_nearest_rank_returns_members_never_interpolates():
    scores = [1.0, 2.0, 10.0]
    assert nearest_rank(scores, 50) == 2.0
    assert nearest_rank(scores, 90) == 10.0
    assert nearest_rank(scores, 10) == 1.0


def test_nearest_rank_empty():
    with pytest.raises(EmptyDistributionError):
        nearest_rank([], 50)


def test_percentile_of_counts_at_or_below():
    scores = [2.8, 3.5, 4.2, 5.0, 5.8, 6.4, 7.1, 7.9, 8.6, 9.4]
    assert percentile_of(7.0, scores) == 60.0
    assert percentile_of(2.8, scores) == 10.0
    assert percentile_of(1.0, scores) == 0.0
    assert percentile_of(10.0, scores) == 100.0
    with pytest.raises(EmptyDistributionError):
        percentile_of(5.0, [])


# --- ingest and filters -----------------------------------------------------

def test_ingest_replaces_by_project_id():
    store = BenchmarkStore()
    ingest_entry(store, "acme", 4.0, {"lang": "py"})
    ingest_entry(store, "acme", 6.5)
    assert len(store) == 1
    assert store.entries["acme"].score == 6.5
    assert store.entries["acme"].tags == ()


@pytest.mark.parametrize(
    "project_id,score,tags",
    [
        ("", 5.0, None),
        ("p", 0.9, None),
        ("p", 10.1, None),
        ("p", "7", None),
        ("p", True, None),
        ("p", 5.0, {"": "x"}),
        ("p", 5.0, {"k": 3}),
    ],
)
def test_ingest_rejects_bad_entries(project_id, score, tags):
    with pytest.raises(InputError):
        ingest_entry(BenchmarkStore(), project_id, score, tags)


def test_matching_scores_requires_every_filter_pair():
    store = BenchmarkStore()
    ingest_entry(store, "a", 3.0, {"lang": "py", "size": "small"})
    ingest_entry(store, "b", 5.0, {"lang": "py", "size": "large"})
    ingest_entry(store, "c", 7.0, {"lang": "ts"})
    assert matching_scores(store) == [3.0, 5.0, 7.0]
    assert matching_scores(store, {"lang": "py"}) == [3.0, 5.0]
    assert matching_scores(store, {"lang": "py", "size": "large"}) == [5.0]
    assert matching_scores(store, {"lang": "go"}) == []


def test_distribution_summary():
    store = BenchmarkStore()
    fill(store, [6.4, 5.8, 2.8, 5.0, 7.1, 3.5, 4.2, 7.9, 8.6, 9.4])
    dist = distribution(store)
    assert (dist.p10, dist.p50, dist.p90) == (2.8, 5.8, 8.6)
    assert dist.n == 10
    assert dist.method == "nearest-rank"
    with pytest.raises(EmptyDistributionError):
        distribution(store, {"lang": "cobol"})


# --- persistence ------------------------------------------------------------

def test_store_round_trip_is_byte_identical(tmp_path):
    store = BenchmarkStore()
    ingest_entry(store, "zeta", 4.25, {"lang": "py"}, "2026-08-16T00:00:00Z")
    ingest_entry(store, "alpha", 9.0, recorded_at="2026-08-15T12:00:00Z")
    first = tmp_path / "bench.jsonl"
    second = tmp_path / "again.jsonl"

    save_store(store, str(first))
    reloaded = load_store(str(first))
    save_store(reloaded, str(second))

    assert first.read_bytes() == second.read_bytes()
    assert reloaded.entries == store.entries
    # entries are written in projectId order regardless of ingest order
    lines = first.read_text().splitlines()
    assert '"schema"' in lines[0]
    assert '"alpha"' in lines[1] and '"zeta"' in lines[2]


def test_load_store_missing_file_is_empty(tmp_path):
    assert len(load_store(str(tmp_path / "absent.jsonl"))) == 0


def test_load_store_rejects_wrong_schema(tmp_path):
    path = tmp_path / "bench.jsonl"
    path.write_text('{"schema": "bench.v2"}\n')
    with pytest.raises(StoreVersionError):
        load_store(str(path))
    path.write_text('{"note": "no schema here"}\n')
    with pytest.raises(StoreVersionError):
        load_store(str(path))


def test_load_store_rejects_malformed_records(tmp_path):
    path = tmp_path / "bench.jsonl"
    path.write_text('{"schema": "bench.v1"}\nnot json\n')
    with pytest.raises(InputError):
        load_store(str(path))
    path.write_text('{"schema": "bench.v1"}\n{"projectId": "p"}\n')
    with pytest.raises(InputError):
        load_store(str(path))


def test_sample_store_distribution_is_frozen():
    dist = distribution(load_sample_store())
    assert dist.n == 10
    assert (dist.p10, dist.p50, dist.p90) == (2.8, 5.8, 8.6)
