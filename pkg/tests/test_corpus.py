"""The bundled corpus must reproduce its hand-written annotation table.

The table in fixtures/corpus_expected.json was derived on paper from the
tokenizer rules (see fixtures/ANNOTATIONS.md) before the analyzer ever ran
on these files. Integer metrics must match exactly; volume is checked
against N * log2(n) recomputed from the annotated integers.
"""

from __future__ import annotations

import math

from quperman.config import AnalysisConfig
from quperman.metrics import analyze_project

INCLUDE_ALL = AnalysisConfig(include=("**/*",))


def test_corpus_matches_annotations(corpus_dir, corpus_expected):
    result = analyze_project(str(corpus_dir), INCLUDE_ALL)
    assert sorted(fm.unit.path for fm in result.files) == sorted(corpus_expected)

    for fm in result.files:
        exp = corpus_expected[fm.unit.path]
        assert fm.unit.language_tag == exp["languageTag"], fm.unit.path
        assert fm.unit.line_count == exp["lineCount"], fm.unit.path
        assert fm.unit.token_count == exp["tokenCount"], fm.unit.path
        assert fm.total_loc == exp["totalLoc"], fm.unit.path
        assert fm.duplication_ratio == exp["duplicationRatio"], fm.unit.path

        want_density = exp["commentLines"] / max(exp["lineCount"], 1)
        assert abs(fm.comment_density - want_density) < 1e-9, fm.unit.path

        assert len(fm.functions) == len(exp["functions"]), fm.unit.path
        for got, want in zip(fm.functions, exp["functions"]):
            where = f"{fm.unit.path}::{want['name']}"
            assert got.name == want["name"], where
            assert got.start_line == want["startLine"], where
            assert got.end_line == want["endLine"], where
            assert got.loc == want["loc"], where
            assert got.cyclomatic == want["cyclomatic"], where
            assert got.max_nesting == want["maxNesting"], where
            assert got.arity == want["arity"], where
            assert got.halstead_length == want["halsteadLength"], where
            assert got.halstead_vocabulary == want["halsteadVocabulary"], where
            assert got.comment_lines == want["commentLines"], where

            want_volume = want["halsteadLength"] * math.log2(want["halsteadVocabulary"])
            assert abs(got.halstead_volume - want_volume) < 1e-9, where


def test_corpus_function_loc_sums_within_file_loc(corpus_dir):
    result = analyze_project(str(corpus_dir), INCLUDE_ALL)
    for fm in result.files:
        assert sum(f.loc for f in fm.functions) <= fm.total_loc, fm.unit.path


def test_corpus_fallback_warnings_name_the_files(corpus_dir):
    result = analyze_project(str(corpus_dir), INCLUDE_ALL)
    warned = {w.path for w in result.warnings}
    assert warned == {"hotel.sh", "india.rb"}


def test_corpus_content_hashes_match_bytes(corpus_dir, corpus_expected):
    import hashlib

    result = analyze_project(str(corpus_dir), INCLUDE_ALL)
    for fm in result.files:
        raw = (corpus_dir / fm.unit.path).read_bytes()
        assert fm.unit.content_hash == hashlib.sha256(raw).hexdigest()
