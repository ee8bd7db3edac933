"""Brute-force reference implementations.

Nothing here touches the trie or the scanner. ``oracle_extract`` looks for
every keyword separately across the whole text, which makes it
Theta(keywords x text) and therefore also the timing baseline for the
benchmark. ``emit_regex_pattern`` builds the classic ``\\b(?:a|b|...)\\b``
alternation for comparisons against a regex engine.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, List, Optional

from .dictionary import DEFAULT_CONFIG, BoundaryConfig, KeywordEntry
from .errors import EmptyAlternationError, UnsupportedKeywordError
from .replacer import splice
from .scanner import MatchSpan

__all__ = [
    "REGEX_METACHARACTERS",
    "valid_match",
    "oracle_extract",
    "oracle_replace",
    "escape_keyword",
    "emit_regex_pattern",
    "compile_regex",
    "regex_finditer",
    "regex_extract",
]

REGEX_METACHARACTERS = "\\^$.|?*+()[]{}"
_ESCAPES = str.maketrans({ch: "\\" + ch for ch in REGEX_METACHARACTERS})


def valid_match(config: BoundaryConfig, text: str, start: int, end: int) -> bool:
    """Whole-word validity of the occurrence ``text[start:end]``."""
    n = len(text)
    starts_ok = start == 0 or config.is_boundary(text[start - 1]) or config.is_boundary(text[start])
    ends_ok = end == n or config.is_boundary(text[end]) or config.is_boundary(text[end - 1])
    return starts_ok and ends_ok


def _lookup_table(entries: Iterable[KeywordEntry], config: BoundaryConfig) -> Dict[str, str]:
    table = {}
    for entry in entries:
        table[config.fold(entry.keyword)] = entry.standardized
    return table


def oracle_extract(
    entries: Iterable[KeywordEntry], config: Optional[BoundaryConfig], text: str
) -> List[MatchSpan]:
    """Leftmost-longest whole-word matches, found one keyword at a time.

    Duplicate keywords are allowed; the last entry wins.
    """
    config = config or DEFAULT_CONFIG
    table = _lookup_table(entries, config)
    folded = config.fold(text)

    # longest valid end for every start position
    longest: Dict[int, tuple] = {}
    for keyword, name in table.items():
        size = len(keyword)
        pos = folded.find(keyword)
        while pos != -1:
            end = pos + size
            if valid_match(config, text, pos, end):
                known = longest.get(pos)
                if known is None or known[0] < end:
                    longest[pos] = (end, name)
            pos = folded.find(keyword, pos + 1)

    spans = []
    resume = 0
    for start in sorted(longest):
        if start >= resume:
            end, name = longest[start]
            spans.append(MatchSpan(start, end, name))
            resume = end
    return spans


def oracle_replace(entries: Iterable[KeywordEntry], config: Optional[BoundaryConfig], text: str) -> str:
    return splice(text, oracle_extract(entries, config, text))


def escape_keyword(keyword: str) -> str:
    return keyword.translate(_ESCAPES)


def emit_regex_pattern(entries: Iterable[KeywordEntry]) -> str:
    """``\\b(?:k1|k2|...)\\b`` with the longest keywords first.

    Ties are ordered lexicographically so the pattern is deterministic.
    Every keyword must start and end with an ASCII word character, since
    ``\\b`` means nothing useful next to punctuation.
    """
    keywords = set()
    for entry in entries:
        kw = entry.keyword
        if DEFAULT_CONFIG.is_boundary(kw[0]) or DEFAULT_CONFIG.is_boundary(kw[-1]):
            raise UnsupportedKeywordError(f"{kw!r} does not start and end with a word character")
        keywords.add(kw)
    if not keywords:
        raise EmptyAlternationError("cannot build an alternation from zero keywords")
    ordered = sorted(keywords, key=lambda kw: (-len(kw), kw))
    return r"\b(?:" + "|".join(map(escape_keyword, ordered)) + r")\b"


def compile_regex(entries: Iterable[KeywordEntry], case_insensitive: bool = False):
    """Compile the alternation; returns ``(pattern, standardized lookup, config)``.

    ``re.ASCII`` keeps ``\\b`` aligned with the default word characters.
    """
    entries = list(entries)
    config = BoundaryConfig(case_insensitive=case_insensitive)
    flags = re.ASCII | (re.IGNORECASE if case_insensitive else 0)
    return re.compile(emit_regex_pattern(entries), flags), _lookup_table(entries, config), config


def regex_finditer(compiled, text: str) -> List[MatchSpan]:
    pattern, table, config = compiled
    return [MatchSpan(m.start(), m.end(), table[config.fold(m.group())]) for m in pattern.finditer(text)]


def regex_extract(entries: Iterable[KeywordEntry], text: str, case_insensitive: bool = False) -> List[MatchSpan]:
    """Matches found by Python's ``re`` using :func:`emit_regex_pattern`."""
    entries = list(entries)
    if not entries:
        return []
    return regex_finditer(compile_regex(entries, case_insensitive), text)
