"""Command-line front end: ``kwtrie find``, ``kwtrie replace``, ``kwtrie bench``.

Exit codes for ``find`` follow grep: 0 when something matched, 1 when
nothing did, 2 on errors. ``bench`` exits 3 when two engines disagree.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from typing import Iterable, List, Optional, Sequence

from .bench import TASKS, BenchConfig, CorpusSpec, format_seconds, render_plot, run_bench, write_csv
from .dictionary import BoundaryConfig, KeywordDict, KeywordEntry
from .errors import BenchmarkIntegrityError, DictParseError, KeywordTrieError
from .replacer import replace_keywords
from .scanner import extract_spans

__all__ = ["DictFileFormat", "parse_dict_file", "format_dict_file", "main"]

PROG = "kwtrie"
MAPPED_SEP = "=>"


class DictFileFormat(str, enum.Enum):
    PLAIN = "plain"
    MAPPED = "mapped"


def parse_dict_file(contents: str, fmt=DictFileFormat.PLAIN) -> List[KeywordEntry]:
    """Parse a dictionary file into entries, in file order.

    plain:  one keyword per line, reported as itself.
    mapped: ``standardized=>synonym1,synonym2,...`` per line.

    Blank lines and lines starting with ``#`` are skipped and every field is
    stripped of surrounding whitespace.
    """
    fmt = DictFileFormat(fmt)
    entries = []
    for lineno, raw in enumerate(contents.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if fmt is DictFileFormat.PLAIN:
            entries.append(KeywordEntry(line, line))
            continue
        if line.count(MAPPED_SEP) != 1:
            raise DictParseError(lineno, f"expected exactly one '{MAPPED_SEP}' separator")
        standardized, synonyms = (part.strip() for part in line.split(MAPPED_SEP))
        if not standardized:
            raise DictParseError(lineno, "empty standardized name")
        for synonym in synonyms.split(","):
            synonym = synonym.strip()
            if not synonym:
                raise DictParseError(lineno, "empty keyword")
            entries.append(KeywordEntry(synonym, standardized))
    return entries


def format_dict_file(entries: Iterable[KeywordEntry], fmt=DictFileFormat.MAPPED) -> str:
    """Inverse of :func:`parse_dict_file` for entries that survive trimming.

    In mapped form, consecutive entries sharing a standardized name go on
    one line, so parsing the result gives back the same entry list.
    """
    fmt = DictFileFormat(fmt)
    lines = []
    if fmt is DictFileFormat.PLAIN:
        lines = [e.keyword for e in entries]
    else:
        groups = []
        for e in entries:
            if groups and groups[-1][0] == e.standardized:
                groups[-1][1].append(e.keyword)
            else:
                groups.append((e.standardized, [e.keyword]))
        lines = [f"{std}{MAPPED_SEP}{','.join(kws)}" for std, kws in groups]
    return "".join(line + "\n" for line in lines)


# --- I/O helpers ---------------------------------------------------------


def _decode(data: bytes) -> str:
    # surrogateescape keeps undecodable bytes so replace can round-trip them
    return data.decode("utf-8", "surrogateescape")


def _encode(text: str) -> bytes:
    return text.encode("utf-8", "surrogateescape")


def _write(stream, data: bytes):
    buffer = getattr(stream, "buffer", None)
    if buffer is None:
        stream.write(data.decode("utf-8", "replace"))
        return
    stream.flush()
    buffer.write(data)
    buffer.flush()


def _read_inputs(paths: Sequence[str]):
    if not paths:
        yield "<stdin>", _decode(sys.stdin.buffer.read())
        return
    for path in paths:
        if path == "-":
            yield "<stdin>", _decode(sys.stdin.buffer.read())
        else:
            with open(path, "rb") as fh:
                yield path, _decode(fh.read())


def _load_dict(args) -> KeywordDict:
    with open(args.dict, encoding="utf-8-sig") as fh:
        contents = fh.read()
    fmt = DictFileFormat.MAPPED if args.mapped else DictFileFormat.PLAIN
    entries = parse_dict_file(contents, fmt)
    config = BoundaryConfig(case_insensitive=args.case_insensitive)
    return KeywordDict.from_entries(entries, config)


def _error(message: str) -> int:
    print(f"{PROG}: error: {message}", file=sys.stderr)
    return 2


# --- commands ------------------------------------------------------------


def cmd_find(args) -> int:
    try:
        kd = _load_dict(args)
        found = False
        for name, text in _read_inputs(args.inputs):
            lines = []
            for span in extract_spans(kd, text):
                found = True
                if args.json:
                    record = {"file": name, "standardized": span.standardized, "start": span.start, "end": span.end}
                    lines.append(json.dumps(record, ensure_ascii=False))
                elif args.spans:
                    lines.append(f"{span.standardized}\t{span.start}\t{span.end}")
                else:
                    lines.append(span.standardized)
            if lines:
                _write(sys.stdout, _encode("".join(line + "\n" for line in lines)))
    except (OSError, KeywordTrieError) as exc:
        return _error(str(exc))
    return 0 if found else 1


def cmd_replace(args) -> int:
    try:
        kd = _load_dict(args)
        chunks = [_encode(replace_keywords(kd, text)) for _, text in _read_inputs(args.inputs)]
        data = b"".join(chunks)
        if args.output and args.output != "-":
            with open(args.output, "wb") as fh:
                fh.write(data)
        else:
            _write(sys.stdout, data)
    except (OSError, KeywordTrieError) as exc:
        return _error(str(exc))
    return 0


def _summary_table(records) -> str:
    rows = [("k", "engine", "task", "seconds", "matches")]
    rows += [(str(r.k), r.engine, r.task, format_seconds(round(r.seconds, 6)), str(r.matches)) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    return "".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n" for row in rows)


def cmd_bench(args) -> int:
    tasks = TASKS if args.task == "both" else (args.task,)
    k_values = tuple(range(0, args.kmax + 1, args.kstep))
    records = []
    try:
        for task in tasks:
            config = BenchConfig(
                corpus=CorpusSpec(word_count=max(10_000, args.kmax), seed=args.seed),
                doc_words=args.doc_words,
                k_values=k_values,
                repetitions=args.reps,
                task=task,
                include_regex=args.regex,
            )
            records.extend(run_bench(config))
    except BenchmarkIntegrityError as exc:
        print(f"{PROG}: benchmark integrity failure: {exc}", file=sys.stderr)
        return 3
    except KeywordTrieError as exc:
        return _error(str(exc))

    try:
        if args.csv == "-":
            write_csv(records, sys.stdout)
        elif args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                write_csv(records, fh)
        if args.svg == "-":
            sys.stdout.write(render_plot(records))
        elif args.svg:
            with open(args.svg, "w", encoding="utf-8", newline="") as fh:
                fh.write(render_plot(records))
    except OSError as exc:
        return _error(str(exc))
    if "-" not in (args.csv, args.svg):
        sys.stdout.write(_summary_table(records))
    return 0


def _add_dict_options(p):
    p.add_argument("--dict", required=True, metavar="PATH", help="keyword dictionary file (UTF-8)")
    p.add_argument(
        "--mapped",
        action="store_true",
        help="dictionary lines are 'standardized=>synonym1,synonym2,...' instead of one keyword per line",
    )
    p.add_argument("--case-insensitive", action="store_true", help="fold case before matching")
    p.add_argument("inputs", nargs="*", metavar="INPUT", help="input files (default: standard input)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Whole-word keyword search and replace over a trie dictionary.",
        epilog="Offsets are counted in Unicode code points, not bytes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    find = sub.add_parser(
        "find",
        help="list keyword matches",
        description="Print the standardized name of every match, one per line. "
        "Offsets (--spans, --json) are Unicode code point positions, end exclusive. "
        "Exit status: 0 if anything matched, 1 if nothing did, 2 on error.",
    )
    _add_dict_options(find)
    out = find.add_mutually_exclusive_group()
    out.add_argument("--spans", action="store_true", help="print 'standardized<TAB>start<TAB>end'")
    out.add_argument("--json", action="store_true", help="print one JSON object per match")
    find.set_defaults(func=cmd_find)

    rep = sub.add_parser("replace", help="rewrite matches to their standardized names")
    _add_dict_options(rep)
    rep.add_argument("--output", "-o", metavar="PATH", help="write here instead of standard output")
    rep.set_defaults(func=cmd_replace)

    bench = sub.add_parser("bench", help="time the trie scan against the per-keyword baseline")
    bench.add_argument("--kmax", type=int, default=20_000)
    bench.add_argument("--kstep", type=int, default=1000)
    bench.add_argument("--doc-words", type=int, default=10_000)
    bench.add_argument("--seed", type=int, default=42)
    bench.add_argument("--task", choices=TASKS + ("both",), default="search")
    bench.add_argument("--csv", metavar="PATH", help="write records as CSV ('-' for standard output)")
    bench.add_argument("--svg", metavar="PATH", help="write an SVG plot ('-' for standard output)")
    bench.add_argument("--reps", type=int, default=5, help="timed repetitions per point; the minimum is kept")
    bench.add_argument("--regex", action="store_true", help="also time Python's re with a keyword alternation")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "bench":
        problems = []
        if args.kstep <= 0:
            problems.append("--kstep must be positive")
        if args.kmax < 0:
            problems.append("--kmax must be non-negative")
        if args.doc_words < 0:
            problems.append("--doc-words must be non-negative")
        if args.reps < 1:
            problems.append("--reps must be at least 1")
        if args.csv == "-" and args.svg == "-":
            problems.append("--csv and --svg cannot both go to standard output")
        if problems:
            parser.print_usage(sys.stderr)
            for problem in problems:
                print(f"{PROG} bench: error: {problem}", file=sys.stderr)
            return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
