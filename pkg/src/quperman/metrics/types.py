"""Value types produced by source analysis."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SourceUnit:
    """One discovered source file.

    path is repo-relative with forward slashes; content_hash is the SHA-256
    hex digest of the raw bytes; token_count excludes comment tokens.
    """

    path: str
    language_tag: str
    content_hash: str
    line_count: int
    token_count: int


@dataclass(frozen=True)
class FunctionMetrics:
    """Raw measurements for one function span.

    Lines are 1-based and inclusive. loc counts lines carrying at least one
    code token (blank and comment-only lines excluded). cyclomatic is
    1 + decision points, so it is always >= 1.
    """

    name: str
    start_line: int
    end_line: int
    loc: int
    cyclomatic: int
    max_nesting: int
    arity: int
    halstead_length: int
    halstead_vocabulary: int
    halstead_volume: float
    comment_lines: int


@dataclass(frozen=True)
class FileMetrics:
    """Per-file measurements plus the ordered function list."""

    unit: SourceUnit
    total_loc: int
    comment_density: float
    functions: tuple[FunctionMetrics, ...]
    duplication_ratio: float


@dataclass(frozen=True)
class AnalysisWarning:
    """A non-fatal problem recorded while analyzing a tree."""

    path: str
    message: str


@dataclass
class AnalysisResult:
    """Everything analyze_project produces for one root."""

    files: list[FileMetrics]
    warnings: list[AnalysisWarning] = field(default_factory=list)
