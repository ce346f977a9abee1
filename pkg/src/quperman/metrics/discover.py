"""Source discovery: deterministic tree walk with include/exclude globs.

Glob dialect, matched against repo-relative paths with "/" separators:
``**/`` crosses directories (including none), ``**`` matches anything,
``*`` matches within one path segment, ``?`` matches one non-separator
character. Patterns anchor to the whole relative path.
"""

from __future__ import annotations

import hashlib
import os
import re

from ..errors import InputError
from .frontends import (
    EXTENSION_LANGUAGES,
    FrontendParseError,
    FunctionSpan,
    Token,
    TokenClass,
    frontend_for_language,
    language_for_path,
)
from .types import AnalysisWarning, SourceUnit

DEFAULT_INCLUDE: tuple[str, ...] = tuple(
    "**/*" + ext for ext in sorted(EXTENSION_LANGUAGES)
)
DEFAULT_EXCLUDE: tuple[str, ...] = (
    "**/.git/**",
    "**/__pycache__/**",
    "**/node_modules/**",
    "**/vendor/**",
    "**/dist/**",
    "**/build/**",
    "**/.venv/**",
    "**/venv/**",
)


def glob_to_regex(pattern: str) -> re.Pattern[str]:
    out: list[str] = []
    i = 0
    n = len(pattern)
    while i < n:
        ch = pattern[i]
        if ch == "*":
            at_boundary = i == 0 or pattern[i - 1] == "/"
            if pattern.startswith("**/", i) and at_boundary:
                out.append("(?:.*/)?")
                i += 3
            elif pattern.startswith("**", i):
                out.append(".*")
                i += 2
            else:
                out.append("[^/]*")
                i += 1
        elif ch == "?":
            out.append("[^/]")
            i += 1
        else:
            out.append(re.escape(ch))
            i += 1
    return re.compile("^" + "".join(out) + "$")


def _matches_any(relpath: str, patterns: list[re.Pattern[str]]) -> bool:
    return any(p.match(relpath) for p in patterns)


def iter_relative_paths(
    root_path: str,
    include: tuple[str, ...] = DEFAULT_INCLUDE,
    exclude: tuple[str, ...] = DEFAULT_EXCLUDE,
) -> list[str]:
    """All matching file paths under root, sorted, "/"-separated."""
    if not os.path.isdir(root_path):
        raise InputError(f"root path is not a readable directory: {root_path}")
    inc = [glob_to_regex(p) for p in include]
    exc = [glob_to_regex(p) for p in exclude]
    found: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root_path):
        dirnames.sort()
        rel_dir = os.path.relpath(dirpath, root_path).replace(os.sep, "/")
        for filename in sorted(filenames):
            rel = filename if rel_dir == "." else f"{rel_dir}/{filename}"
            if _matches_any(rel, inc) and not _matches_any(rel, exc):
                found.append(rel)
    found.sort()
    return found


def load_source(
    root_path: str,
    relpath: str,
    frontend_overrides: dict[str, str] | None = None,
) -> tuple[SourceUnit | None, str, list[Token], list[FunctionSpan], list[AnalysisWarning]]:
    """Read, tokenize, and span-extract one file.

    Tokenizing and extraction stay on the same frontend: if the registered
    one rejects the file, the fallback redoes both so spans and tokens
    agree. Unreadable files yield (None, ...) plus a warning.
    """
    warnings: list[AnalysisWarning] = []
    full = os.path.join(root_path, relpath.replace("/", os.sep))
    try:
        with open(full, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        warnings.append(AnalysisWarning(relpath, f"unreadable, skipped: {exc.strerror or exc}"))
        return None, "", [], [], warnings

    text = raw.decode("utf-8", errors="replace")
    language_tag = language_for_path(relpath)
    frontend = frontend_for_language(language_tag, frontend_overrides)
    try:
        tokens = frontend.tokenize(text)
        spans, span_warnings = frontend.extract_functions(text, tokens)
    except FrontendParseError as exc:
        fallback = frontend_for_language("unknown")
        warnings.append(
            AnalysisWarning(relpath, f"{frontend.name} frontend failed ({exc}); fallback applied")
        )
        tokens = fallback.tokenize(text)
        spans, span_warnings = fallback.extract_functions(text, tokens)
    warnings.extend(AnalysisWarning(relpath, message) for message in span_warnings)

    unit = SourceUnit(
        path=relpath,
        language_tag=language_tag,
        content_hash=hashlib.sha256(raw).hexdigest(),
        line_count=len(text.splitlines()),
        token_count=sum(1 for t in tokens if t.cls is not TokenClass.COMMENT),
    )
    return unit, text, tokens, spans, warnings


def discover_sources(
    root_path: str,
    include: tuple[str, ...] | None = None,
    exclude: tuple[str, ...] | None = None,
    frontend_overrides: dict[str, str] | None = None,
) -> list[SourceUnit]:
    """Ordered SourceUnits for every readable matching file under root."""
    relpaths = iter_relative_paths(
        root_path,
        include if include is not None else DEFAULT_INCLUDE,
        exclude if exclude is not None else DEFAULT_EXCLUDE,
    )
    units: list[SourceUnit] = []
    for relpath in relpaths:
        unit, _text, _tokens, _spans, _warnings = load_source(
            root_path, relpath, frontend_overrides
        )
        if unit is not None:
            units.append(unit)
    return units
