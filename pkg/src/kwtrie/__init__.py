"""Whole-word keyword search and replace in one pass over the text.

Build a :class:`KeywordDict`, freeze it, then scan::

    >>> from kwtrie import KeywordDict, extract_keywords, replace_keywords
    >>> kd = KeywordDict()
    >>> kd.add_mapping("javascript", ["javascript", "java script"])
    2
    >>> _ = kd.freeze()
    >>> extract_keywords(kd, "I like java script")
    ['javascript']
    >>> replace_keywords(kd, "I like java script")
    'I like javascript'
"""

from .dictionary import (
    DEFAULT_WORD_CHARS,
    BoundaryConfig,
    KeywordDict,
    KeywordEntry,
    is_boundary,
    new_dict,
)
from .errors import *  # noqa: F401,F403
from .oracle import emit_regex_pattern, oracle_extract, oracle_replace
from .replacer import replace_keywords, splice
from .scanner import MatchSpan, extract_keywords, extract_spans

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_WORD_CHARS",
    "BoundaryConfig",
    "KeywordDict",
    "KeywordEntry",
    "MatchSpan",
    "is_boundary",
    "new_dict",
    "extract_spans",
    "extract_keywords",
    "replace_keywords",
    "splice",
    "oracle_extract",
    "oracle_replace",
    "emit_regex_pattern",
]
