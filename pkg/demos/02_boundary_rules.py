"""
Whole words and longest matches
===============================

Keywords only match whole words, and at any position the longest keyword wins.
"""

# %%
from kwtrie import DEFAULT_WORD_CHARS, BoundaryConfig, KeywordDict, KeywordEntry, extract_spans


def scan(keywords, text, config=None):
    kd = KeywordDict.from_entries([KeywordEntry(k) for k in keywords], config)
    return [(s.start, s.end, text[s.start:s.end]) for s in extract_spans(kd, text)]


# %%
# "Apple" is not a word inside "Pineapple".
print(scan(["Apple"], "I like Pineapple"))
print(scan(["Apple"], "I like Apple."))

# %%
# The longest keyword at a start position wins; shorter ones are not reported.
print(scan(["Machine", "Learning", "Machine learning"], "I like Machine learning"))

# %%
# A multi-word keyword must also end on a boundary. When it does not, the
# scanner falls back to the longest shorter keyword that does.
print(scan(["new", "new york city"], "new york cityscape"))

# %%
# Keywords may start or end with punctuation. The edge next to punctuation is
# always a valid boundary, as it would be for a regex \b.
print(scan([".net"], "asp.net and .net"))
print(scan(["c++"], "use c++ now, or c++x"))

# %%
# By default only ASCII letters, digits and underscore are word characters.
# Extend the set to make other characters part of words.
print(scan(["cafe"], "écafeé"))
print(scan(["cafe"], "écafeé", BoundaryConfig(DEFAULT_WORD_CHARS | {"é"})))
