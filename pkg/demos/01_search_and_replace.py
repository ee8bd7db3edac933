"""
Finding and replacing keywords
==============================

Build a dictionary once, freeze it, then scan as many documents as you like.
"""

# %%
# A dictionary maps each keyword to the name it should be reported as.
# Several spellings can share one standardized name.
from kwtrie import KeywordDict, extract_keywords, extract_spans, replace_keywords

skills = KeywordDict()
skills.add_keyword("java")
skills.add_keyword("j2ee", "java")
skills.add_mapping("javascript", ["javascript", "javascripting", "java script"])
skills.add_keyword("machine learning")
skills.freeze()
print(skills)

# %%
# Search returns standardized names in document order, duplicates included.
resume = "Built j2ee services, some java script, and a machine learning pipeline in java."
print(extract_keywords(skills, resume))

# %%
# Spans give code point offsets into the original text.
for span in extract_spans(skills, resume):
    print(f"{span.start:3d} {span.end:3d}  {resume[span.start:span.end]!r:22} -> {span.standardized}")

# %%
# Replace rewrites every match and copies everything else verbatim.
print(replace_keywords(skills, resume))

# %%
# Case folding is opt-in through the boundary configuration.
from kwtrie import BoundaryConfig

folded = KeywordDict(BoundaryConfig(case_insensitive=True))
folded.add_keyword("Python", "python")
folded.freeze()
print(extract_spans(folded, "PYTHON, Python and python"))
