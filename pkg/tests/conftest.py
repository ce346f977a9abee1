"""Shared fixtures: fixture paths and hand-built metric factories."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from quperman.metrics.types import FileMetrics, FunctionMetrics, SourceUnit

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
GOLDENS = Path(__file__).parent / "goldens"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture
def corpus_expected() -> dict:
    return json.loads((FIXTURES / "corpus_expected.json").read_text())["files"]


def make_unit(
    path: str = "mod.py",
    language_tag: str = "python",
    line_count: int = 40,
    token_count: int = 120,
    content_hash: str = "0" * 64,
) -> SourceUnit:
    return SourceUnit(
        path=path,
        language_tag=language_tag,
        content_hash=content_hash,
        line_count=line_count,
        token_count=token_count,
    )


def make_fn(
    name: str = "fn",
    start_line: int = 1,
    end_line: int = 10,
    loc: int = 10,
    cyclomatic: int = 1,
    max_nesting: int = 0,
    arity: int = 1,
    halstead_length: int = 20,
    halstead_vocabulary: int = 10,
    halstead_volume: float = 66.43856189774725,
    comment_lines: int = 0,
) -> FunctionMetrics:
    return FunctionMetrics(
        name=name,
        start_line=start_line,
        end_line=end_line,
        loc=loc,
        cyclomatic=cyclomatic,
        max_nesting=max_nesting,
        arity=arity,
        halstead_length=halstead_length,
        halstead_vocabulary=halstead_vocabulary,
        halstead_volume=halstead_volume,
        comment_lines=comment_lines,
    )


def make_file_metrics(
    path: str = "mod.py",
    total_loc: int = 30,
    comment_density: float = 0.1,
    functions: tuple[FunctionMetrics, ...] = (),
    duplication_ratio: float = 0.0,
    line_count: int = 40,
) -> FileMetrics:
    return FileMetrics(
        unit=make_unit(path=path, line_count=line_count),
        total_loc=total_loc,
        comment_density=comment_density,
        functions=functions,
        duplication_ratio=duplication_ratio,
    )
