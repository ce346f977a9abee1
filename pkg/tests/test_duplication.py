"""Token-window duplication against a brute-force oracle."""

from __future__ import annotations

import random

import pytest

from quperman.errors import InputError
from quperman.metrics.duplication import (
    DEFAULT_WINDOW_SIZE,
    MIN_WINDOW_SIZE,
    duplication_ratios,
    normalized_stream,
)
from quperman.metrics.frontends import FRONTENDS


def oracle_ratios(streams: dict[str, tuple[str, ...]], window: int) -> dict[str, float]:
    """All-pairs window comparison, no hashing or counting tricks."""
    windows: list[tuple[str, tuple[str, ...], int]] = []
    for path, stream in streams.items():
        for i in range(len(stream) - window + 1):
            windows.append((path, stream[i : i + window], i))

    covered: dict[str, set[int]] = {path: set() for path in streams}
    for a in range(len(windows)):
        for b in range(len(windows)):
            if a == b:
                continue
            pa, wa, ia = windows[a]
            pb, wb, _ = windows[b]
            if wa == wb:
                covered[pa].update(range(ia, ia + window))
                break

    out = {}
    for path, stream in streams.items():
        out[path] = len(covered[path]) / len(stream) if len(stream) >= window else 0.0
    return out


def test_normalized_stream_masks_identifiers():
    tokens = FRONTENDS["python"].tokenize("total = base + 1  # note\n")
    assert normalized_stream(tokens) == ("_", "=", "_", "+", "1")


def test_identical_files_fully_covered():
    stream = tuple(str(i % 3) for i in range(30))
    ratios = duplication_ratios({"a": stream, "b": stream}, 25)
    assert ratios == {"a": 1.0, "b": 1.0}


def test_short_stream_scores_zero():
    ratios = duplication_ratios({"a": ("x",) * 24}, 25)
    assert ratios == {"a": 0.0}


def test_window_below_floor_rejected():
    with pytest.raises(InputError):
        duplication_ratios({"a": ("x",) * 30}, MIN_WINDOW_SIZE - 1)


def test_windows_do_not_cross_file_boundaries():
    # each half is unique on its own; only their concatenation would repeat
    left = tuple(f"L{i}" for i in range(13))
    right = tuple(f"R{i}" for i in range(13))
    ratios = duplication_ratios({"a": left, "b": right, "c": left + right}, 25)
    assert ratios == {"a": 0.0, "b": 0.0, "c": 0.0}


def test_repeat_within_one_file_counts():
    block = tuple(str(i) for i in range(25))
    stream = block + ("sep",) + block
    (ratio,) = duplication_ratios({"a": stream}, 25).values()
    assert ratio == 50 / 51


def test_matches_brute_force_oracle_on_random_corpora():
    rng = random.Random(20260816)
    alphabet = ["_", "(", ")", "=", "+", "if", "0", "1", "2"]
    for _ in range(40):
        streams = {}
        for f in range(rng.randint(1, 5)):
            n = rng.randint(0, 60)
            streams[f"f{f}"] = tuple(rng.choice(alphabet) for _ in range(n))
        window = rng.choice([8, 10, 25])
        assert duplication_ratios(streams, window) == oracle_ratios(streams, window)


def test_default_window_size():
    assert DEFAULT_WINDOW_SIZE == 25
    assert MIN_WINDOW_SIZE == 8
