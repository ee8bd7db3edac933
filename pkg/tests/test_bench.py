import io
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kwtrie.bench import (
    BenchConfig,
    BenchRecord,
    CorpusSpec,
    format_seconds,
    gen_corpus,
    gen_document,
    read_csv,
    render_plot,
    run_bench,
    sample_keywords,
    write_csv,
)
from kwtrie.errors import (
    BenchmarkIntegrityError,
    InvalidConfigError,
    NothingToPlotError,
    SampleTooLargeError,
    UniquenessError,
)


@pytest.fixture(scope="module")
def corpus():
    return gen_corpus(CorpusSpec(10_000, 3, 8, seed=42))


def test_corpus_unique_and_reproducible(corpus):
    assert len(corpus) == 10_000 == len(set(corpus))
    assert gen_corpus(CorpusSpec(10_000, 3, 8, seed=42)) == corpus
    assert all(3 <= len(w) <= 8 and w.isalpha() and w.islower() for w in corpus)
    assert gen_corpus(CorpusSpec(10_000, 3, 8, seed=43)) != corpus


def test_corpus_lengths_spread(corpus):
    lengths = {len(w) for w in corpus}
    assert lengths == set(range(3, 9))


def test_tiny_corpus():
    words = gen_corpus(CorpusSpec(2, 1, 1, seed=7))
    assert len(words) == 2 and len(set(words)) == 2 and all(len(w) == 1 for w in words)


def test_corpus_pigeonhole():
    with pytest.raises(UniquenessError):
        gen_corpus(CorpusSpec(40, 1, 1))
    assert len(gen_corpus(CorpusSpec(26, 1, 1))) == 26


@pytest.mark.parametrize("kwargs", [dict(word_count=0), dict(min_len=0), dict(min_len=5, max_len=4), dict(alphabet="")])
def test_corpus_spec_validation(kwargs):
    with pytest.raises(InvalidConfigError):
        CorpusSpec(**kwargs)


def test_document(corpus):
    assert gen_document(corpus, 0, 1) == ""
    assert gen_document(["a"], 3, 99) == "a a a"
    doc = gen_document(corpus, 10_000, seed=43)
    assert doc.count(" ") == 9_999
    assert doc == gen_document(corpus, 10_000, seed=43)
    assert set(doc.split(" ")) <= set(corpus)


def test_sample_keywords(corpus):
    assert sample_keywords(corpus, 0, 1) == []
    everything = sample_keywords(corpus, len(corpus), 5)
    assert sorted(e.keyword for e in everything) == sorted(corpus)
    assert [e.keyword for e in everything] != list(corpus)
    some = sample_keywords(corpus, 500, 5)
    assert all(e.keyword == e.standardized for e in some)
    assert [e.keyword for e in some] == [e.keyword for e in everything[:500]]
    with pytest.raises(SampleTooLargeError):
        sample_keywords(corpus, len(corpus) + 1, 5)


def test_sample_15k_of_20k():
    big = gen_corpus(CorpusSpec(20_000, 3, 8, seed=42))
    entries = sample_keywords(big, 15_000, 44)
    assert len({e.keyword for e in entries}) == 15_000


def test_bench_config_grows_corpus():
    with pytest.warns(UserWarning, match="growing"):
        config = BenchConfig(corpus=CorpusSpec(100), k_values=(0, 150))
    assert config.corpus.word_count == 150
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert BenchConfig(corpus=CorpusSpec(200), k_values=(0, 150)).corpus.word_count == 200


def test_bench_config_defaults():
    with pytest.warns(UserWarning):
        config = BenchConfig()
    assert config.k_values == tuple(range(0, 20_001, 1000))
    assert len(config.k_values) == 21
    assert (config.doc_words, config.repetitions) == (10_000, 5)
    assert (config.doc_seed, config.sample_seed) == (43, 44)


@pytest.mark.parametrize("kwargs", [dict(task="grep"), dict(repetitions=0), dict(k_values=(-1,))])
def test_bench_config_validation(kwargs):
    with pytest.raises(InvalidConfigError):
        BenchConfig(corpus=CorpusSpec(100), **kwargs)


@pytest.mark.parametrize("task", ["search", "replace"])
def test_run_bench_small(task):
    config = BenchConfig(
        corpus=CorpusSpec(300, seed=3), doc_words=400, k_values=(0, 50, 300), repetitions=1, task=task, include_regex=True
    )
    records = run_bench(config)
    assert [(r.k, r.engine) for r in records] == [
        (k, e) for k in (0, 50, 300) for e in ("trie", "naive-baseline", "regex-external")
    ]
    by_k = {}
    for r in records:
        assert r.task == task and r.seconds >= 0
        by_k.setdefault(r.k, set()).add(r.matches)
    assert by_k[0] == {0}
    assert by_k[300] == {400}  # every document word is a keyword
    assert all(len(m) == 1 for m in by_k.values())
    assert all(r.build_seconds > 0 for r in records if r.engine == "trie" and r.k)


def test_run_bench_detects_disagreement(monkeypatch):
    import kwtrie.bench as bench

    monkeypatch.setattr(bench, "oracle_extract", lambda entries, config, text: [])
    config = BenchConfig(corpus=CorpusSpec(50, seed=1), doc_words=50, k_values=(50,), repetitions=1)
    with pytest.raises(BenchmarkIntegrityError):
        run_bench(config)


# --- CSV ------------------------------------------------------------------------


def test_csv_header_only():
    sink = io.StringIO()
    write_csv([], sink)
    assert sink.getvalue() == "k,engine,task,seconds,matches\n"


def test_csv_row_format():
    sink = io.StringIO()
    write_csv([BenchRecord(1000, "trie", "search", 0.002, 950)], sink)
    assert sink.getvalue().splitlines()[1] == "1000,trie,search,0.002,950"


@pytest.mark.parametrize("value, text", [(0.0, "0.0"), (1e-05, "0.00001"), (12345.5, "12345.5"), (2.0, "2.0")])
def test_seconds_are_positional(value, text):
    assert format_seconds(value) == text


records_st = st.lists(
    st.builds(
        BenchRecord,
        k=st.integers(0, 10**6),
        engine=st.sampled_from(["trie", "naive-baseline", "regex-external"]),
        task=st.sampled_from(["search", "replace"]),
        seconds=st.floats(0, 1e4, allow_nan=False),
        matches=st.integers(0, 10**6),
    ),
    max_size=30,
)


@given(records_st)
def test_csv_round_trip(records):
    sink = io.StringIO()
    write_csv(records, sink)
    text = sink.getvalue()
    for row in text.splitlines()[1:]:
        seconds = row.split(",")[3]
        assert "e" not in seconds and "," not in seconds and "." in seconds
    assert read_csv(text) == records


# --- SVG ------------------------------------------------------------------------


def fake_records(engines=("trie", "naive-baseline"), ks=range(0, 20_001, 1000)):
    return [BenchRecord(k, e, "search", (k + 1) * (1e-6 if e == "trie" else 4e-5), k // 2) for e in engines for k in ks]


def test_svg_one_polyline_per_series():
    svg = render_plot(fake_records())
    assert svg.count("<polyline") == 2
    assert svg.startswith('<?xml version="1.0"') and svg.rstrip().endswith("</svg>")
    assert "number of keywords (k)" in svg and "time (seconds)" in svg
    assert "trie (search)" in svg and "naive-baseline (search)" in svg
    points = svg.split("<polyline", 2)[1].split('points="')[1].split('"')[0]
    assert len(points.split()) == 21


def test_svg_single_record():
    svg = render_plot([BenchRecord(0, "trie", "search", 0.0, 0)])
    assert svg.count("<polyline") == 1
    points = svg.split('points="')[1].split('"')[0]
    assert len(points.split()) == 1


def test_svg_deterministic():
    assert render_plot(fake_records()) == render_plot(fake_records())


def test_svg_empty():
    with pytest.raises(NothingToPlotError):
        render_plot([])


def test_svg_parses_as_xml():
    import xml.etree.ElementTree as ET

    root = ET.fromstring(render_plot(fake_records(("a<b", "c&d"))))
    assert root.tag.endswith("svg")
