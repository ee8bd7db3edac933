"""Exception hierarchy for kwtrie.

Everything derives from :class:`KeywordTrieError` (itself a ``ValueError``)
so callers can catch the whole family in one place.
"""


class KeywordTrieError(ValueError):
    pass


class InvalidConfigError(KeywordTrieError):
    pass


class InvalidEntryError(KeywordTrieError):
    pass


class FrozenDictError(KeywordTrieError):
    """Mutation attempted on a frozen dictionary."""


class NotFrozenError(KeywordTrieError):
    """Scan attempted on a dictionary that is still being built."""


class InvalidSpansError(KeywordTrieError):
    pass


class UnsupportedKeywordError(KeywordTrieError):
    pass


class EmptyAlternationError(KeywordTrieError):
    pass


class UniquenessError(KeywordTrieError):
    """The corpus spec cannot produce that many distinct words."""


class SampleTooLargeError(KeywordTrieError):
    pass


class BenchmarkIntegrityError(KeywordTrieError):
    """Two engines disagreed on the same input. This is a correctness bug."""


class NothingToPlotError(KeywordTrieError):
    pass


class DictParseError(KeywordTrieError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")
