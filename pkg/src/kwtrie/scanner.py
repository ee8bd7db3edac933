"""Single-pass whole-word keyword extraction.

An occurrence ``text[i:j]`` of a stored keyword counts as a match when

* its start is at the text edge, or next to a boundary character
  (``text[i-1]`` or ``text[i]`` is a boundary), and
* its end is at the text edge, or next to a boundary character
  (``text[j]`` or ``text[j-1]`` is a boundary).

For keywords made only of word characters this is the usual whole-word
rule. Keywords that begin or end with a boundary character (``".net"``,
``"c++"``) get the same treatment a regex ``\\b`` would give them.

Matches are chosen greedily: the leftmost start that has any match wins,
the longest keyword at that start wins, and scanning resumes at its end.
"""

from __future__ import annotations

from typing import List, NamedTuple

from .dictionary import KEYWORD_KEY, KeywordDict
from .errors import NotFrozenError

__all__ = ["MatchSpan", "extract_spans", "extract_keywords"]


class MatchSpan(NamedTuple):
    """Half-open ``[start, end)`` range in characters, plus the name it maps to."""

    start: int
    end: int
    standardized: str


def _require_frozen(kd: KeywordDict):
    if not kd.frozen:
        raise NotFrozenError("freeze() the dictionary before scanning")


def _scan(kd: KeywordDict, text: str) -> list:
    """Core loop; returns ``(start, end, standardized)`` tuples."""
    _require_frozen(kd)
    root = kd.root
    if not root or not text:
        return []
    config = kd.config
    words = config.word_chars
    folded = config.fold(text)
    n = len(text)
    longest = kd.max_length
    key = KEYWORD_KEY
    found = []
    append = found.append
    i = 0
    while i < n:
        # a start strictly inside a run of word characters never matches
        if i and text[i] in words and text[i - 1] in words:
            i += 1
            continue
        node = root.get(folded[i])
        if node is None:
            i += 1
            continue
        # walk forward at most `longest` characters, remembering the deepest
        # keyword whose end sits on a boundary
        j = i + 1
        best_end = -1
        if key in node and (j == n or text[j] not in words or text[i] not in words):
            best_end = j
            best_name = node[key]
        for ch in folded[j:i + longest]:
            node = node.get(ch)
            if node is None:
                break
            j += 1
            if key in node and (j == n or text[j] not in words or text[j - 1] not in words):
                best_end = j
                best_name = node[key]
        if best_end < 0:
            i += 1
        else:
            append((i, best_end, best_name))
            i = best_end
    return found


def extract_spans(kd: KeywordDict, text: str) -> List[MatchSpan]:
    """Return every non-overlapping leftmost-longest match in ``text``.

    Offsets count characters (code points), not bytes.
    """
    return list(map(MatchSpan._make, _scan(kd, text)))


def extract_keywords(kd: KeywordDict, text: str) -> List[str]:
    """Standardized names of all matches in ``text``, in order, duplicates kept."""
    return [name for _, _, name in _scan(kd, text)]
