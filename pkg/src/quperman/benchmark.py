"""Benchmark corpus: persisted project scores, tag filtering, and
nearest-rank percentile statistics.

The store is a JSON-lines file (format "bench.v1"): a header record
naming the schema, then one record per entry with stable key order.
Entries are keyed by projectId; re-ingesting an id replaces the prior
entry. Percentiles use the nearest-rank method, so every reported value
is an actual member score, never an interpolation:

    p-th percentile of n ascending scores = value at 1-based index
    ceil(p*n/100), computed in integer arithmetic as (p*n + 99) // 100.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EmptyDistributionError, InputError, StoreVersionError

STORE_SCHEMA = "bench.v1"

PERCENTILE_METHOD = "nearest-rank"

LAGGARDS_PERCENTILE = 10
LEADERS_PERCENTILE = 90


@dataclass(frozen=True)
class BenchmarkEntry:
    project_id: str
    score: float
    tags: tuple[tuple[str, str], ...]
    recorded_at: str  # UTC, ISO 8601

    def tag_map(self) -> dict[str, str]:
        return dict(self.tags)


@dataclass(frozen=True)
class BenchmarkDistribution:
    filter: tuple[tuple[str, str], ...]
    n: int
    p10: float
    p50: float
    p90: float
    method: str = PERCENTILE_METHOD


@dataclass
class BenchmarkStore:
    entries: dict[str, BenchmarkEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def ordered(self) -> list[BenchmarkEntry]:
        return [self.entries[pid] for pid in sorted(self.entries)]


def _normalize_tags(tags: Mapping[str, str] | None) -> tuple[tuple[str, str], ...]:
    if tags is None:
        return ()
    if not isinstance(tags, Mapping) or not all(
        isinstance(k, str) and isinstance(v, str) and k for k, v in tags.items()
    ):
        raise InputError("tags must map non-empty string keys to string values")
    return tuple(sorted(tags.items()))


def ingest_entry(
    store: BenchmarkStore,
    project_id: str,
    score: float,
    tags: Mapping[str, str] | None = None,
    recorded_at: str = "",
) -> BenchmarkEntry:
    """Add or replace the entry for project_id."""
    if not project_id:
        raise InputError("projectId must be non-empty")
    if not isinstance(score, (int, float)) or isinstance(score, bool):
        raise InputError("score must be a number")
    if not 1.0 <= float(score) <= 10.0:
        raise InputError(f"score must lie in [1, 10], got {score}")
    entry = BenchmarkEntry(
        project_id=project_id,
        score=float(score),
        tags=_normalize_tags(tags),
        recorded_at=recorded_at,
    )
    store.entries[project_id] = entry
    return entry


def nearest_rank(sorted_scores: list[float], percentile: int) -> float:
    """Value at 1-based index ceil(p*n/100) of an ascending list."""
    n = len(sorted_scores)
    if n == 0:
        raise EmptyDistributionError("no scores to rank")
    index = max(1, (percentile * n + 99) // 100)
    return sorted_scores[min(index, n) - 1]


def matching_scores(
    store: BenchmarkStore, tag_filters: Mapping[str, str] | None = None
) -> list[float]:
    """Ascending scores of entries whose tags contain every filter pair."""
    wanted = dict(tag_filters or {})
    scores = [
        entry.score
        for entry in store.ordered()
        if all(entry.tag_map().get(k) == v for k, v in wanted.items())
    ]
    scores.sort()
    return scores


def distribution(
    store: BenchmarkStore, tag_filters: Mapping[str, str] | None = None
) -> BenchmarkDistribution:
    scores = matching_scores(store, tag_filters)
    if not scores:
        raise EmptyDistributionError("no benchmark entries match the filter")
    return BenchmarkDistribution(
        filter=tuple(sorted((tag_filters or {}).items())),
        n=len(scores),
        p10=nearest_rank(scores, LAGGARDS_PERCENTILE),
        p50=nearest_rank(scores, 50),
        p90=nearest_rank(scores, LEADERS_PERCENTILE),
    )


def percentile_of(score: float, scores: Iterable[float]) -> float:
    """Share of entries at or below the score, on [0, 100]."""
    values = list(scores)
    if not values:
        raise EmptyDistributionError("percentile position needs at least one entry")
    at_or_below = sum(1 for v in values if v <= score)
    return 100.0 * at_or_below / len(values)


def save_store(store: BenchmarkStore, path: str) -> None:
    lines = [json.dumps({"schema": STORE_SCHEMA}, separators=(", ", ": "))]
    for entry in store.ordered():
        lines.append(
            json.dumps(
                {
                    "projectId": entry.project_id,
                    "score": entry.score,
                    "tags": dict(entry.tags),
                    "recordedAt": entry.recorded_at,
                },
                separators=(", ", ": "),
                ensure_ascii=False,
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_store(path: str) -> BenchmarkStore:
    """Read a store file; missing or empty files yield an empty store."""
    store = BenchmarkStore()
    if not os.path.exists(path):
        return store
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = [line for line in fh.read().split("\n") if line.strip()]
    except OSError as exc:
        raise InputError(f"cannot read benchmark store {path}: {exc.strerror or exc}") from None
    if not raw_lines:
        return store
    try:
        records = [json.loads(line) for line in raw_lines]
    except json.JSONDecodeError as exc:
        raise InputError(f"benchmark store {path} is not valid JSON lines: {exc}") from None

    header = records[0]
    if not isinstance(header, dict) or "schema" not in header:
        raise StoreVersionError(f"benchmark store {path} lacks a schema header")
    if header["schema"] != STORE_SCHEMA:
        raise StoreVersionError(
            f"benchmark store {path} has schema {header['schema']!r}; "
            f"this build reads {STORE_SCHEMA!r}"
        )
    for record in records[1:]:
        if not isinstance(record, dict):
            raise InputError(f"benchmark store {path} contains a non-object record")
        try:
            ingest_entry(
                store,
                project_id=record["projectId"],
                score=record["score"],
                tags=record.get("tags") or {},
                recorded_at=record.get("recordedAt", ""),
            )
        except KeyError as exc:
            raise InputError(f"benchmark record missing field {exc}") from None
    return store


def sample_store_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "sample_bench.jsonl")


def load_sample_store() -> BenchmarkStore:
    return load_store(sample_store_path())
