"""
Checking the scanner against brute force
========================================

``oracle_extract`` searches for each keyword separately, so it shares no logic
with the trie walk. Random dictionaries with nested prefixes and punctuation
make good stress tests.
"""

# %%
import random

from kwtrie import BoundaryConfig, KeywordDict, KeywordEntry, extract_spans, oracle_extract
from kwtrie.oracle import emit_regex_pattern, regex_extract

rng = random.Random(0)
alphabet = "abAB .+"
disagreements = 0
for trial in range(2000):
    entries = [
        KeywordEntry("".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4))), rng.choice("XYZ"))
        for _ in range(rng.randint(0, 30))
    ]
    text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 120)))
    config = BoundaryConfig(case_insensitive=rng.random() < 0.5)
    if extract_spans(KeywordDict.from_entries(entries, config), text) != oracle_extract(entries, config, text):
        disagreements += 1
print("disagreements:", disagreements)

# %%
# The classic regex approach builds one alternation, longest keywords first.
entries = [KeywordEntry(k) for k in ["java", "java script", "j2ee"]]
pattern = emit_regex_pattern(entries)
print(pattern)
text = "java script and j2ee, not javascript"
print([s.standardized for s in regex_extract(entries, text)])
print([s.standardized for s in oracle_extract(entries, None, text)])
