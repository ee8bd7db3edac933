"""Trie keyword dictionary and boundary configuration.

A :class:`KeywordDict` maps keyword character paths to standardized names.
Each trie node is a plain ``dict``: single-character keys lead to child
nodes and the special key ``"_keyword_"`` holds the standardized name of a
keyword that ends at that node. Children are always keyed by exactly one
character, so the terminal key can never collide with them.

Dictionaries have two phases. While building, keywords can be added and
removed by a single owner. After :meth:`KeywordDict.freeze` the trie is
read-only, may be shared between threads, and is the only state the
scanner accepts.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import FrozenDictError, InvalidConfigError, InvalidEntryError

__all__ = [
    "DEFAULT_WORD_CHARS",
    "KEYWORD_KEY",
    "BoundaryConfig",
    "KeywordEntry",
    "KeywordDict",
    "fold_char",
    "is_boundary",
    "new_dict",
]

#: ASCII letters, digits and underscore: the set regex ``\w`` uses in ASCII mode.
DEFAULT_WORD_CHARS = frozenset(string.ascii_letters + string.digits + "_")

KEYWORD_KEY = "_keyword_"


@lru_cache(maxsize=4096)
def fold_char(ch: str) -> str:
    """Simple lowercase folding of one character.

    Characters whose lowercase form is longer than one character (``'İ'``)
    are left alone so offsets in folded and raw text stay aligned.
    """
    low = ch.lower()
    return low if len(low) == 1 else ch


@dataclass(frozen=True)
class BoundaryConfig:
    """Which characters count as word characters, and whether to fold case.

    Every character outside ``word_chars`` is a boundary character. Boundary
    classification always looks at the raw text, never the folded text.
    """

    word_chars: frozenset = DEFAULT_WORD_CHARS
    case_insensitive: bool = False

    def __post_init__(self):
        chars = frozenset(self.word_chars)
        if not chars:
            raise InvalidConfigError("word_chars must not be empty")
        for ch in chars:
            if not isinstance(ch, str) or len(ch) != 1:
                raise InvalidConfigError(f"word_chars entries must be single characters, got {ch!r}")
        object.__setattr__(self, "word_chars", chars)

    def is_boundary(self, ch: str) -> bool:
        return ch not in self.word_chars

    def fold(self, text: str) -> str:
        if not self.case_insensitive:
            return text
        if text.isascii():
            return text.lower()
        return "".join(map(fold_char, text))


DEFAULT_CONFIG = BoundaryConfig()


def is_boundary(config: BoundaryConfig, ch: str) -> bool:
    return config.is_boundary(ch)


@dataclass(frozen=True)
class KeywordEntry:
    """A keyword and the standardized name it should be reported as."""

    keyword: str
    standardized: str = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.standardized is None:
            object.__setattr__(self, "standardized", self.keyword)
        if not isinstance(self.keyword, str) or not self.keyword:
            raise InvalidEntryError(f"keyword must be a non-empty string, got {self.keyword!r}")
        if not isinstance(self.standardized, str) or not self.standardized:
            raise InvalidEntryError(
                f"standardized name for {self.keyword!r} must be a non-empty string"
            )


class KeywordDict:
    """Trie from keywords to standardized names.

    >>> kd = KeywordDict()
    >>> kd.add_keyword("java")
    True
    >>> kd.add_keyword("j2ee", "java")
    True
    >>> kd.get_standardized("j2ee")
    'java'
    """

    def __init__(self, config: Optional[BoundaryConfig] = None):
        if config is None:
            config = DEFAULT_CONFIG
        elif not isinstance(config, BoundaryConfig):
            raise InvalidConfigError(f"expected a BoundaryConfig, got {type(config).__name__}")
        self.config = config
        self.root: dict = {}
        self._count = 0
        self._frozen = False
        self._max_length = 0

    @classmethod
    def from_entries(
        cls, entries: Iterable[KeywordEntry], config: Optional[BoundaryConfig] = None, freeze: bool = True
    ) -> "KeywordDict":
        kd = cls(config)
        for entry in entries:
            kd.add_keyword(entry.keyword, entry.standardized)
        if freeze:
            kd.freeze()
        return kd

    @property
    def count(self) -> int:
        return self._count

    @property
    def frozen(self) -> bool:
        return self._frozen

    def __len__(self):
        return self._count

    def __contains__(self, keyword):
        return self.get_standardized(keyword) is not None

    def __repr__(self):
        state = "frozen" if self._frozen else "building"
        return f"<KeywordDict {self._count} keywords, {state}>"

    def _check_mutable(self):
        if self._frozen:
            raise FrozenDictError("dictionary is frozen")

    def add_keyword(self, keyword: str, standardized: Optional[str] = None) -> bool:
        """Insert ``keyword`` mapped to ``standardized`` (defaults to the keyword).

        Returns True for a new keyword. Re-adding an existing keyword
        overwrites its standardized name and returns False.
        """
        self._check_mutable()
        entry = KeywordEntry(keyword, standardized)
        node = self.root
        for ch in self.config.fold(entry.keyword):
            node = node.setdefault(ch, {})
        is_new = KEYWORD_KEY not in node
        node[KEYWORD_KEY] = entry.standardized
        if is_new:
            self._count += 1
        return is_new

    def add_mapping(self, standardized: str, synonyms: Iterable[str]) -> int:
        """Map every synonym to ``standardized``; return how many were new."""
        synonyms = list(synonyms)
        if not synonyms:
            raise InvalidEntryError(f"no synonyms given for {standardized!r}")
        return sum(self.add_keyword(s, standardized) for s in synonyms)

    def _find_node(self, keyword: str) -> Optional[dict]:
        node = self.root
        for ch in self.config.fold(keyword):
            node = node.get(ch)
            if node is None:
                return None
        return node

    def get_standardized(self, keyword: str) -> Optional[str]:
        if not keyword:
            return None
        node = self._find_node(keyword)
        if node is None:
            return None
        return node.get(KEYWORD_KEY)

    def remove_keyword(self, keyword: str) -> bool:
        self._check_mutable()
        if not keyword:
            return False
        path = []
        node = self.root
        for ch in self.config.fold(keyword):
            child = node.get(ch)
            if child is None:
                return False
            path.append((node, ch))
            node = child
        if KEYWORD_KEY not in node:
            return False
        del node[KEYWORD_KEY]
        self._count -= 1
        # prune nodes left with neither children nor payload
        for parent, ch in reversed(path):
            if parent[ch]:
                break
            del parent[ch]
        return True

    def freeze(self) -> "KeywordDict":
        if not self._frozen:
            self._max_length = _longest_keyword(self.root)
            self._frozen = True
        return self

    @property
    def max_length(self) -> int:
        """Length of the longest stored keyword; only tracked once frozen."""
        return self._max_length

    def items(self) -> Iterator[tuple]:
        """Yield ``(folded keyword, standardized)`` pairs in trie order."""
        stack = [("", self.root)]
        while stack:
            prefix, node = stack.pop()
            if KEYWORD_KEY in node:
                yield prefix, node[KEYWORD_KEY]
            for ch in sorted((c for c in node if c != KEYWORD_KEY), reverse=True):
                stack.append((prefix + ch, node[ch]))

    def iter_nodes(self) -> Iterator[dict]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(child for key, child in node.items() if key != KEYWORD_KEY)


def _longest_keyword(root: dict) -> int:
    longest = 0
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        if KEYWORD_KEY in node and depth > longest:
            longest = depth
        stack.extend((child, depth + 1) for key, child in node.items() if key != KEYWORD_KEY)
    return longest


def new_dict(config: Optional[BoundaryConfig] = None) -> KeywordDict:
    return KeywordDict(config)
