"""Keyword replacement on top of the scanner."""

from __future__ import annotations

from typing import Sequence

from .dictionary import KeywordDict
from .errors import InvalidSpansError
from .scanner import MatchSpan, extract_spans

__all__ = ["splice", "replace_keywords"]


def splice(text: str, spans: Sequence[MatchSpan]) -> str:
    """Substitute each span's slice of ``text`` with its standardized name.

    Spans must be sorted, non-overlapping and inside the text. Characters
    outside the spans are copied unchanged.
    """
    pieces = []
    pos = 0
    n = len(text)
    for start, end, name in spans:
        if start < pos or end <= start or end > n:
            raise InvalidSpansError(f"span ({start}, {end}) is out of order, empty or out of bounds")
        pieces.append(text[pos:start])
        pieces.append(name)
        pos = end
    pieces.append(text[pos:])
    return "".join(pieces)


def replace_keywords(kd: KeywordDict, text: str) -> str:
    """Copy of ``text`` with every matched keyword swapped for its standardized name.

    The output is not rescanned, so a standardized name that itself
    contains a keyword is left as is.
    """
    return splice(text, extract_spans(kd, text))
