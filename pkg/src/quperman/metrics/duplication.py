"""Token-window duplication detection across a file corpus.

A window is a fixed-length run of consecutive normalized tokens. All
non-comment tokens participate, punctuation included, and identifiers are
replaced by a placeholder so renamed copies still match. A window is
duplicated when the identical normalized sequence occurs two or more times
anywhere in the corpus (including twice in one file). Every token position
covered by at least one duplicated window counts as duplicated; a file's
ratio is covered positions over total positions. Files shorter than one
window have ratio 0.0.

Matching is exact on token tuples, no hashing shortcuts, so a brute-force
window comparison reproduces these numbers verbatim.
"""

from __future__ import annotations

from collections import Counter

from ..errors import InputError

from .frontends import Token, TokenClass

DEFAULT_WINDOW_SIZE = 25
MIN_WINDOW_SIZE = 8

IDENTIFIER_PLACEHOLDER = "_"


def normalized_stream(tokens: list[Token]) -> tuple[str, ...]:
    """Non-comment token values with identifiers collapsed to one symbol."""
    return tuple(
        IDENTIFIER_PLACEHOLDER if t.identifier else t.value
        for t in tokens
        if t.cls is not TokenClass.COMMENT
    )


def duplication_ratios(
    streams: dict[str, tuple[str, ...]], window_size: int = DEFAULT_WINDOW_SIZE
) -> dict[str, float]:
    """Corpus-wide duplicated-token ratio per file path."""
    if window_size < MIN_WINDOW_SIZE:
        raise InputError(f"window size must be at least {MIN_WINDOW_SIZE}, got {window_size}")

    counts: Counter[tuple[str, ...]] = Counter()
    for stream in streams.values():
        for start in range(len(stream) - window_size + 1):
            counts[stream[start : start + window_size]] += 1

    ratios: dict[str, float] = {}
    for path, stream in streams.items():
        total = len(stream)
        if total < window_size:
            ratios[path] = 0.0
            continue
        covered = [False] * total
        for start in range(total - window_size + 1):
            if counts[stream[start : start + window_size]] >= 2:
                for pos in range(start, start + window_size):
                    covered[pos] = True
        ratios[path] = sum(covered) / total
    return ratios
