"""Scaling benchmark: trie scan versus the per-keyword baseline.

The protocol: generate a seeded corpus of random lowercase words, join a
random sample of them into one document, then for each keyword count
``k`` draw ``k`` distinct corpus words as the dictionary and time both
engines over the document. The trie curve should stay flat as ``k``
grows while the baseline grows linearly.
"""

from __future__ import annotations

import csv
import gc
import io
import math
import string
import time
import warnings
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from .dictionary import DEFAULT_CONFIG, KeywordDict, KeywordEntry
from .errors import (
    BenchmarkIntegrityError,
    InvalidConfigError,
    NothingToPlotError,
    SampleTooLargeError,
    UniquenessError,
)
from .oracle import compile_regex, oracle_extract, oracle_replace, regex_finditer
from .replacer import replace_keywords, splice
from .scanner import extract_keywords, extract_spans

__all__ = [
    "CorpusSpec",
    "BenchConfig",
    "BenchRecord",
    "ENGINES",
    "TASKS",
    "gen_corpus",
    "gen_document",
    "sample_keywords",
    "run_bench",
    "write_csv",
    "read_csv",
    "format_seconds",
    "render_plot",
]

TASKS = ("search", "replace")
ENGINES = ("trie", "naive-baseline", "regex-external")
CSV_HEADER = ("k", "engine", "task", "seconds", "matches")


@dataclass(frozen=True)
class CorpusSpec:
    word_count: int = 10_000
    min_len: int = 3
    max_len: int = 8
    alphabet: str = string.ascii_lowercase
    seed: int = 42

    def __post_init__(self):
        if self.word_count < 1:
            raise InvalidConfigError("word_count must be at least 1")
        if not 1 <= self.min_len <= self.max_len:
            raise InvalidConfigError("need 1 <= min_len <= max_len")
        if not self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidConfigError("alphabet must be non-empty with no repeated letters")

    def capacity(self) -> int:
        """Number of distinct words the spec can produce."""
        a = len(self.alphabet)
        return sum(a**length for length in range(self.min_len, self.max_len + 1))


def _default_k_values():
    return tuple(range(0, 20_001, 1000))


@dataclass(frozen=True)
class BenchConfig:
    corpus: CorpusSpec = field(default_factory=CorpusSpec)
    doc_words: int = 10_000
    k_values: Tuple[int, ...] = field(default_factory=_default_k_values)
    repetitions: int = 5
    task: str = "search"
    doc_seed: Optional[int] = None
    sample_seed: Optional[int] = None
    include_regex: bool = False

    def __post_init__(self):
        object.__setattr__(self, "k_values", tuple(self.k_values))
        if self.task not in TASKS:
            raise InvalidConfigError(f"task must be one of {TASKS}, got {self.task!r}")
        if self.repetitions < 1:
            raise InvalidConfigError("repetitions must be at least 1")
        if self.doc_words < 0:
            raise InvalidConfigError("doc_words must be non-negative")
        if any(k < 0 for k in self.k_values):
            raise InvalidConfigError("k values must be non-negative")
        # the sampled keywords must fit in the corpus
        needed = max(self.k_values, default=0)
        if needed > self.corpus.word_count:
            warnings.warn(
                f"corpus of {self.corpus.word_count} words cannot supply {needed} distinct keywords; "
                f"growing it to {needed}",
                stacklevel=3,
            )
            object.__setattr__(self, "corpus", replace(self.corpus, word_count=needed))
        if self.doc_seed is None:
            object.__setattr__(self, "doc_seed", self.corpus.seed + 1)
        if self.sample_seed is None:
            object.__setattr__(self, "sample_seed", self.corpus.seed + 2)


@dataclass(frozen=True)
class BenchRecord:
    k: int
    engine: str
    task: str
    seconds: float
    matches: int
    # dictionary (or regex) build time; kept out of the CSV
    build_seconds: float = field(default=0.0, compare=False)


def gen_corpus(spec: CorpusSpec) -> List[str]:
    """``spec.word_count`` distinct random words, reproducible from ``spec.seed``.

    Lengths are uniform over ``[min_len, max_len]`` and letters uniform over
    the alphabet; a word that was already drawn is simply redrawn.
    """
    if spec.capacity() < spec.word_count:
        raise UniquenessError(
            f"only {spec.capacity()} distinct words exist for this alphabet and length range, "
            f"{spec.word_count} requested"
        )
    rng = np.random.default_rng(spec.seed)
    letters = np.array(list(spec.alphabet))
    seen = set()
    words = []
    while len(words) < spec.word_count:
        length = int(rng.integers(spec.min_len, spec.max_len + 1))
        word = "".join(letters[rng.integers(0, len(letters), size=length)])
        if word not in seen:
            seen.add(word)
            words.append(word)
    return words


def gen_document(corpus: Sequence[str], doc_words: int, seed: int) -> str:
    """Join ``doc_words`` corpus words drawn with replacement by single spaces."""
    if not corpus:
        raise InvalidConfigError("corpus must not be empty")
    if doc_words <= 0:
        return ""
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, len(corpus), size=doc_words)
    return " ".join(corpus[i] for i in picks)


def sample_keywords(corpus: Sequence[str], k: int, seed: int) -> List[KeywordEntry]:
    """``k`` distinct corpus words as identity entries.

    The draw is a prefix of one seeded permutation, so for a fixed seed the
    keyword set for a smaller ``k`` is contained in the set for a larger one.
    """
    if k < 0:
        raise InvalidConfigError("k must be non-negative")
    if k > len(corpus):
        raise SampleTooLargeError(f"cannot draw {k} distinct keywords from {len(corpus)} words")
    order = np.random.default_rng(seed).permutation(len(corpus))[:k]
    return [KeywordEntry(corpus[i], corpus[i]) for i in order]


def _best_time(fn: Callable[[], object], repetitions: int) -> Tuple[float, object]:
    """Minimum wall-clock time over ``repetitions`` runs after one warm-up.

    The garbage collector is paused while timing, as ``timeit`` does, so a
    collection triggered by one engine's garbage is not billed to another.
    """
    result = fn()
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        best = math.inf
        for _ in range(repetitions):
            t0 = time.perf_counter()
            result = fn()
            best = min(best, time.perf_counter() - t0)
    finally:
        if was_enabled:
            gc.enable()
    return best, result


def _regex_runner(entries, doc, task):
    """Runner for Python's ``re`` plus its compile time (zero keywords: no pattern)."""
    if not entries:
        return ((lambda: []) if task == "search" else (lambda: doc)), 0.0
    t0 = time.perf_counter()
    compiled = compile_regex(entries)
    build = time.perf_counter() - t0
    if task == "search":
        return (lambda: [span.standardized for span in regex_finditer(compiled, doc)]), build
    return (lambda: splice(doc, regex_finditer(compiled, doc))), build


def run_bench(config: BenchConfig, progress: Optional[Callable[[BenchRecord], None]] = None) -> List[BenchRecord]:
    """Time every engine at every ``k``; raise if any two engines disagree."""
    corpus = gen_corpus(config.corpus)
    doc = gen_document(corpus, config.doc_words, config.doc_seed)
    task = config.task
    records = []
    for k in config.k_values:
        entries = sample_keywords(corpus, k, config.sample_seed)

        t0 = time.perf_counter()
        kd = KeywordDict.from_entries(entries, DEFAULT_CONFIG)
        builds = {"trie": time.perf_counter() - t0}

        if task == "search":
            runners = {
                "trie": lambda: extract_keywords(kd, doc),
                "naive-baseline": lambda: [s.standardized for s in oracle_extract(entries, DEFAULT_CONFIG, doc)],
            }
        else:
            runners = {
                "trie": lambda: replace_keywords(kd, doc),
                "naive-baseline": lambda: oracle_replace(entries, DEFAULT_CONFIG, doc),
            }
        if config.include_regex:
            runners["regex-external"], builds["regex-external"] = _regex_runner(entries, doc, task)

        # matches are counted once, outside the timed region
        matches = len(extract_spans(kd, doc))
        reference = None
        for engine, fn in runners.items():
            seconds, result = _best_time(fn, config.repetitions)
            if reference is None:
                reference = result
            elif result != reference:
                raise BenchmarkIntegrityError(f"{engine} disagrees with trie at k={k} ({task})")
            if task == "search" and len(result) != matches:
                raise BenchmarkIntegrityError(f"{engine} found {len(result)} matches at k={k}, expected {matches}")
            record = BenchRecord(k, engine, task, seconds, matches, builds.get(engine, 0.0))
            records.append(record)
            if progress is not None:
                progress(record)
    return records


def format_seconds(seconds: float) -> str:
    """Shortest positional decimal that round-trips (never exponent notation)."""
    return np.format_float_positional(float(seconds), unique=True, trim="0")


def write_csv(records: Iterable[BenchRecord], sink: TextIO) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.k, r.engine, r.task, format_seconds(r.seconds), r.matches])


def read_csv(source) -> List[BenchRecord]:
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    return [BenchRecord(int(k), engine, task, float(sec), int(m)) for k, engine, task, sec, m in reader]


# --- SVG rendering -------------------------------------------------------

_WIDTH, _HEIGHT = 720, 480
_LEFT, _RIGHT, _TOP, _BOTTOM = 80, 200, 30, 60
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


def _nice_step(span: float, ticks: int = 5) -> float:
    raw = span / ticks
    mag = 10 ** math.floor(math.log10(raw))
    for mult in (1, 2, 2.5, 5, 10):
        if raw <= mult * mag:
            return mult * mag
    return 10 * mag


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return np.format_float_positional(round(v, 12), trim="-")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_plot(records: Sequence[BenchRecord], title: str = "Keyword scan time vs. number of keywords") -> str:
    """Self-contained SVG line chart: ``k`` on x, seconds on y, one line per engine and task."""
    records = list(records)
    if not records:
        raise NothingToPlotError("no benchmark records to plot")

    series = {}
    for r in records:
        series.setdefault((r.engine, r.task), []).append((r.k, r.seconds))
    for points in series.values():
        points.sort()

    k_max = max(r.k for r in records)
    s_max = max(r.seconds for r in records)
    x_step = _nice_step(k_max) if k_max > 0 else 1
    y_step = _nice_step(s_max) if s_max > 0 else 1
    x_top = x_step * max(1, math.ceil(k_max / x_step))
    y_top = y_step * max(1, math.ceil(s_max / y_step))

    plot_w = _WIDTH - _LEFT - _RIGHT
    plot_h = _HEIGHT - _TOP - _BOTTOM

    def sx(k):
        return _LEFT + plot_w * k / x_top

    def sy(s):
        return _TOP + plot_h * (1 - s / y_top)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.2f}" y="18" text-anchor="middle" font-size="14">{_escape(title)}</text>',
    ]

    # axes, grid and ticks
    x0, y0 = _LEFT, _TOP + plot_h
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0 + plot_w}" y2="{y0}" stroke="black"/>')
    out.append(f'<line x1="{x0}" y1="{_TOP}" x2="{x0}" y2="{y0}" stroke="black"/>')
    n_x = int(round(x_top / x_step))
    for i in range(n_x + 1):
        v = i * x_step
        x = sx(v)
        out.append(f'<line x1="{_fmt(x)}" y1="{y0}" x2="{_fmt(x)}" y2="{y0 + 5}" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{y0 + 18}" text-anchor="middle">{_tick_label(v)}</text>')
    n_y = int(round(y_top / y_step))
    for i in range(n_y + 1):
        v = i * y_step
        y = sy(v)
        out.append(f'<line x1="{x0 - 5}" y1="{_fmt(y)}" x2="{x0 + plot_w}" y2="{_fmt(y)}" stroke="#dddddd"/>')
        out.append(f'<text x="{x0 - 8}" y="{_fmt(y + 4)}" text-anchor="end">{_tick_label(v)}</text>')
    out.append(
        f'<text x="{_fmt(x0 + plot_w / 2)}" y="{_HEIGHT - 15}" text-anchor="middle">number of keywords (k)</text>'
    )
    out.append(
        f'<text x="18" y="{_fmt(_TOP + plot_h / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 18 {_fmt(_TOP + plot_h / 2)})">time (seconds)</text>'
    )

    # one polyline per series, legend on the right
    for idx, key in enumerate(sorted(series)):
        colour = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(f"{_fmt(sx(k))},{_fmt(sy(s))}" for k, s in series[key])
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="2" points="{pts}"/>')
        ly = _TOP + 10 + 20 * idx
        lx = _WIDTH - _RIGHT + 15
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{colour}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}">{_escape(key[0])} ({_escape(key[1])})</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
