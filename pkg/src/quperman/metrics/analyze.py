"""Whole-project analysis pipeline.

Three phases: discover matching files, measure each file (this phase may
run on a thread pool), then run corpus-wide duplication detection and
attach the ratios. Results are merged in sorted path order regardless of
completion order, and nothing in the per-file phase mutates shared
state, so worker count cannot change the output.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING

from .discover import iter_relative_paths, load_source
from .duplication import duplication_ratios, normalized_stream
from .measure import measure_file
from .types import AnalysisResult, AnalysisWarning, FileMetrics

if TYPE_CHECKING:
    from ..config import AnalysisConfig


def _analyze_one(
    root_path: str, relpath: str, config: "AnalysisConfig"
) -> tuple[FileMetrics | None, tuple[str, ...], list[AnalysisWarning]]:
    unit, _text, tokens, spans, warnings = load_source(
        root_path, relpath, config.overrides()
    )
    if unit is None:
        return None, (), warnings
    metrics = measure_file(unit, tokens, spans, nested_mode=config.nested_mode)
    return metrics, normalized_stream(tokens), warnings


def analyze_project(root_path: str, config: "AnalysisConfig | None" = None) -> AnalysisResult:
    """Measure every matching file under root and attach duplication ratios."""
    if config is None:
        from ..config import AnalysisConfig

        config = AnalysisConfig()

    relpaths = iter_relative_paths(root_path, config.include, config.exclude)

    def work(relpath: str):
        return _analyze_one(root_path, relpath, config)

    if config.workers > 1 and len(relpaths) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(work, relpaths))
    else:
        outcomes = [work(relpath) for relpath in relpaths]

    streams: dict[str, tuple[str, ...]] = {}
    measured: list[FileMetrics] = []
    warnings: list[AnalysisWarning] = []
    for relpath, (metrics, stream, file_warnings) in zip(relpaths, outcomes):
        warnings.extend(file_warnings)
        if metrics is None:
            continue
        streams[relpath] = stream
        measured.append(metrics)

    ratios = duplication_ratios(streams, config.window_size)
    files = tuple(
        dataclasses.replace(fm, duplication_ratio=ratios[fm.unit.path]) for fm in measured
    )
    return AnalysisResult(files=files, warnings=tuple(warnings))
