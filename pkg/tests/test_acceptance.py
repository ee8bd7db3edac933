"""Exit criteria for the package, each at its stated tolerance.

Run on its own with ``pytest tests/test_acceptance.py``; the terminal
summary lists one PASS/FAIL line per criterion.
"""

import io
import random
import time
import warnings

import pytest

from casegen import random_case
from kwtrie import (
    BoundaryConfig,
    KeywordDict,
    KeywordEntry,
    extract_keywords,
    extract_spans,
    replace_keywords,
    splice,
)
from kwtrie.bench import BenchConfig, CorpusSpec, render_plot, run_bench, write_csv
from kwtrie.dictionary import KEYWORD_KEY
from kwtrie.oracle import oracle_extract, oracle_replace, valid_match

N_RANDOM_CASES = 10_000
N_MODEL_SEQUENCES = 1_000
SCALING_K = tuple(range(1000, 20_001, 1000))


def scaling_config():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the corpus is grown to 20k words on purpose
        return BenchConfig(
            corpus=CorpusSpec(seed=42), doc_words=10_000, k_values=SCALING_K, repetitions=5, task="search"
        )


@pytest.fixture(scope="module")
def random_cases():
    rng = random.Random(20_240_501)
    return [random_case(rng) for _ in range(N_RANDOM_CASES)]


@pytest.fixture(scope="module")
def scaling_run():
    t0 = time.perf_counter()
    records = run_bench(scaling_config())
    return records, time.perf_counter() - t0


def seconds_at(records, engine, k):
    (r,) = [r for r in records if r.engine == engine and r.k == k]
    return r.seconds


def test_criterion_1_paper_examples():
    t0 = time.perf_counter()

    apple = KeywordDict.from_entries([KeywordEntry("Apple")])
    assert extract_spans(apple, "I like Pineapple") == []

    ml = KeywordDict.from_entries([KeywordEntry(k) for k in ("Machine", "Learning", "Machine learning")])
    assert extract_spans(ml, "I like Machine learning") == [(7, 23, "Machine learning")]

    fig3 = KeywordDict()
    fig3.add_keyword("java", "java")
    fig3.add_keyword("j2ee", "java")
    fig3.freeze()
    assert extract_keywords(fig3, "j2ee") == ["java"]
    assert extract_keywords(fig3, "java") == ["java"]
    assert replace_keywords(fig3, "I like j2ee") == "I like java"

    js = KeywordDict.from_entries([KeywordEntry("java script", "javascript")])
    assert replace_keywords(js, "I like java script") == "I like javascript"

    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_oracle_equivalence(random_cases):
    t0 = time.perf_counter()
    modes = set()
    for entries, config, text in random_cases:
        kd = KeywordDict.from_entries(entries, config)
        assert extract_spans(kd, text) == oracle_extract(entries, config, text), (entries, config, text)
        assert replace_keywords(kd, text) == oracle_replace(entries, config, text), (entries, config, text)
        modes.add(config.case_insensitive)
    elapsed = time.perf_counter() - t0
    assert len(random_cases) >= 10_000
    assert modes == {True, False}
    assert max(len(e) for e, _, _ in random_cases) == 50
    assert max(len(t) for _, _, t in random_cases) == 200
    edge = [e.keyword for es, _, _ in random_cases for e in es]
    assert any(k[0] in " .é" for k in edge) and any(k[-1] in " .é" for k in edge)
    assert any(" " in k[1:-1] for k in edge if len(k) > 2)
    assert elapsed < 60


def test_criterion_3_scaling_shape(scaling_run):
    records, elapsed = scaling_run
    trie_ratio = seconds_at(records, "trie", 20_000) / seconds_at(records, "trie", 1000)
    base_ratio = seconds_at(records, "naive-baseline", 20_000) / seconds_at(records, "naive-baseline", 1000)
    speedup = seconds_at(records, "naive-baseline", 15_000) / seconds_at(records, "trie", 15_000)
    print(f"trie 20k/1k = {trie_ratio:.2f}, baseline 20k/1k = {base_ratio:.2f}, speedup at 15k = {speedup:.1f}x, "
          f"run {elapsed:.1f}s")
    assert trie_ratio <= 3
    assert base_ratio >= 10
    assert speedup >= 20
    assert elapsed < 120


def test_criterion_4_benchmark_integrity(scaling_run):
    records, _ = scaling_run
    assert sorted({r.k for r in records}) == list(SCALING_K)
    for k in SCALING_K:
        counts = {r.engine: r.matches for r in records if r.k == k}
        assert set(counts) == {"trie", "naive-baseline"}
        assert len(set(counts.values())) == 1
    # every document word is a keyword once k reaches the corpus size
    assert {r.matches for r in records if r.k == 20_000} == {10_000}


def _structure_ok(kd):
    nodes = list(kd.iter_nodes())
    if any(not node for node in nodes if node is not kd.root):
        return False
    return sum(KEYWORD_KEY in node for node in nodes) == kd.count


def test_criterion_5_structural_properties(random_cases):
    for entries, config, text in random_cases:
        kd = KeywordDict.from_entries(entries, config)
        spans = extract_spans(kd, text)
        for a, b in zip(spans, spans[1:]):
            assert a.end <= b.start
        for s in spans:
            assert 0 <= s.start < s.end <= len(text)
            assert valid_match(config, text, s.start, s.end)
            assert kd.get_standardized(config.fold(text[s.start:s.end])) == s.standardized
        out = splice(text, spans)
        assert len(out) == len(text) - sum(s.end - s.start for s in spans) + sum(len(s.standardized) for s in spans)

        plain = BoundaryConfig(config.word_chars, case_insensitive=False)
        identity = KeywordDict.from_entries([KeywordEntry(e.keyword, e.keyword) for e in entries], plain)
        assert replace_keywords(identity, text) == text

    rng = random.Random(7)
    for seq in range(N_MODEL_SEQUENCES):
        ci = seq % 2 == 1
        kd = KeywordDict(BoundaryConfig(case_insensitive=ci))
        model = {}
        for _ in range(rng.randint(1, 40)):
            kw = "".join(rng.choice("abA .") for _ in range(rng.randint(1, 4)))
            key = kw.lower() if ci else kw
            op = rng.random()
            if op < 0.5:
                std = rng.choice("XYZ")
                assert kd.add_keyword(kw, std) == (key not in model)
                model[key] = std
            elif op < 0.8:
                assert kd.remove_keyword(kw) == (model.pop(key, None) is not None)
            else:
                assert kd.get_standardized(kw) == model.get(key)
            assert kd.count == len(model)
        assert dict(kd.items()) == model
        assert _structure_ok(kd)


def test_criterion_6_determinism(scaling_run):
    records, _ = scaling_run
    again = run_bench(scaling_config())

    def csv_without_seconds(recs):
        sink = io.StringIO()
        write_csv(recs, sink)
        return [line.split(",")[:3] + line.split(",")[4:] for line in sink.getvalue().splitlines()]

    assert csv_without_seconds(again) == csv_without_seconds(records)
    assert render_plot(records) == render_plot(list(records))
    assert render_plot(again) == render_plot(list(again))
