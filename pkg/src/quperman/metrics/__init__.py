"""Static source measurement: discovery, frontends, metrics, duplication."""

from .analyze import analyze_project
from .discover import (
    DEFAULT_EXCLUDE,
    DEFAULT_INCLUDE,
    discover_sources,
    iter_relative_paths,
    load_source,
)
from .duplication import DEFAULT_WINDOW_SIZE, MIN_WINDOW_SIZE, duplication_ratios, normalized_stream
from .frontends import (
    FRONTENDS,
    FunctionSpan,
    Token,
    TokenClass,
    frontend_for_language,
    language_for_path,
)
from .measure import (
    NESTED_MODE_MERGE,
    NESTED_MODE_SEPARATE,
    halstead_volume,
    line_coverage,
    measure_file,
    owned_lines,
)
from .types import AnalysisResult, AnalysisWarning, FileMetrics, FunctionMetrics, SourceUnit

__all__ = [
    "AnalysisResult",
    "AnalysisWarning",
    "DEFAULT_EXCLUDE",
    "DEFAULT_INCLUDE",
    "DEFAULT_WINDOW_SIZE",
    "FRONTENDS",
    "FileMetrics",
    "FunctionMetrics",
    "FunctionSpan",
    "MIN_WINDOW_SIZE",
    "NESTED_MODE_MERGE",
    "NESTED_MODE_SEPARATE",
    "SourceUnit",
    "Token",
    "TokenClass",
    "analyze_project",
    "discover_sources",
    "duplication_ratios",
    "frontend_for_language",
    "halstead_volume",
    "iter_relative_paths",
    "language_for_path",
    "line_coverage",
    "load_source",
    "measure_file",
    "normalized_stream",
    "owned_lines",
]
