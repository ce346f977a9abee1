"""Per-function and per-file metric computation over frontend output.

Line accounting works on token coverage: a line is a code line when at
least one non-comment token starts on or spans it, and a comment line when
a comment token does. Mixed lines count as both. Everything else (blank
lines, unrecognized characters) is neither.

Nested function handling defaults to exclusive attribution: each line
belongs to the innermost function span containing it, so a parent's loc,
complexity, and volume exclude its inner functions while the sums over a
file never double count. Maximum nesting depth is the exception and is
measured over the whole span, inner functions included, because deeply
nested inner definitions are still nesting. The "merge" mode instead drops
inner spans and attributes everything to the enclosing function.
"""

from __future__ import annotations

import math

from .frontends import FunctionSpan, Token, TokenClass
from .types import FileMetrics, FunctionMetrics, SourceUnit

NESTED_MODE_SEPARATE = "separate"
NESTED_MODE_MERGE = "merge"


def line_coverage(tokens: list[Token]) -> tuple[set[int], set[int]]:
    """Return (code lines, comment lines) covered by the token list."""
    code_lines: set[int] = set()
    comment_lines: set[int] = set()
    for tok in tokens:
        target = comment_lines if tok.cls is TokenClass.COMMENT else code_lines
        target.update(range(tok.line, tok.end_line + 1))
    return code_lines, comment_lines


def owned_lines(spans: list[FunctionSpan]) -> list[set[int]]:
    """Lines of each span minus lines of spans contained inside it."""
    ranges = [set(range(s.start_line, s.end_line + 1)) for s in spans]
    owned = [set(r) for r in ranges]
    for i, span in enumerate(spans):
        for j, other in enumerate(spans):
            if i == j:
                continue
            if other.start_line >= span.start_line and other.end_line <= span.end_line:
                if (other.start_line, other.end_line) == (span.start_line, span.end_line):
                    # identical ranges: treat the later-listed span as inner
                    if j < i:
                        continue
                owned[i] -= ranges[j]
        # a span always keeps its own definition line
        owned[i].add(span.start_line)
    return owned


def halstead_volume(operators: list[str], operands: list[str]) -> float:
    """Volume = total occurrences times log2 of the distinct vocabulary."""
    total = len(operators) + len(operands)
    if total == 0:
        return 0.0
    vocabulary = len(set(operators)) + len(set(operands))
    return total * math.log2(vocabulary)


def _function_metrics(
    span: FunctionSpan,
    lines: set[int],
    tokens: list[Token],
    code_lines: set[int],
    comment_lines: set[int],
) -> FunctionMetrics:
    attributed = [t for t in tokens if t.line in lines]
    operators = [t.value for t in attributed if t.cls is TokenClass.OPERATOR]
    operands = [t.value for t in attributed if t.cls is TokenClass.OPERAND]
    decisions = sum(1 for t in attributed if t.decision)

    span_tokens = [
        t
        for t in tokens
        if span.start_line <= t.line <= span.end_line and t.cls is not TokenClass.COMMENT
    ]
    if span.whole_file:
        body_depth = 0
    else:
        base_depth = next(
            (t.depth for t in span_tokens if t.line == span.start_line), 0
        )
        body_depth = base_depth + 1
    max_depth = max((t.depth for t in span_tokens), default=0)

    return FunctionMetrics(
        name=span.name,
        start_line=span.start_line,
        end_line=span.end_line,
        loc=len(code_lines & lines),
        cyclomatic=1 + decisions,
        max_nesting=max(0, max_depth - body_depth),
        arity=span.arity,
        halstead_length=len(operators) + len(operands),
        halstead_vocabulary=len(set(operators)) + len(set(operands)),
        halstead_volume=halstead_volume(operators, operands),
        comment_lines=len(comment_lines & lines),
    )


def measure_file(
    unit: SourceUnit,
    tokens: list[Token],
    spans: list[FunctionSpan],
    nested_mode: str = NESTED_MODE_SEPARATE,
) -> FileMetrics:
    """Assemble FileMetrics (duplication ratio left at 0.0 for a later pass)."""
    if nested_mode == NESTED_MODE_MERGE:
        spans = [s for s in spans if not s.nested]
        lines_per_span = [set(range(s.start_line, s.end_line + 1)) for s in spans]
    else:
        lines_per_span = owned_lines(spans)

    code_lines, comment_lines = line_coverage(tokens)
    non_comment = [t for t in tokens if t.cls is not TokenClass.COMMENT]

    functions = tuple(
        _function_metrics(span, lines, non_comment, code_lines, comment_lines)
        for span, lines in zip(spans, lines_per_span)
    )

    return FileMetrics(
        unit=unit,
        total_loc=len(code_lines),
        comment_density=len(comment_lines) / max(unit.line_count, 1),
        functions=functions,
        duplication_ratio=0.0,
    )
