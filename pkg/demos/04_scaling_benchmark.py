"""
How run time scales with the number of keywords
===============================================

Time the trie scan and the per-keyword baseline on a 10,000-word random
document while the dictionary grows. This is a reduced sweep; the command
``kwtrie bench`` runs the full 0..20,000 range.
"""

# %%
import sys

from kwtrie.bench import BenchConfig, CorpusSpec, render_plot, run_bench, write_csv

config = BenchConfig(
    corpus=CorpusSpec(word_count=10_000, seed=42),
    doc_words=10_000,
    k_values=range(0, 10_001, 2000),
    repetitions=3,
    task="search",
)
records = run_bench(config)

# %%
write_csv(records, sys.stdout)

# %%
# The trie stays nearly flat while the baseline grows with k.
trie = {r.k: r.seconds for r in records if r.engine == "trie"}
base = {r.k: r.seconds for r in records if r.engine == "naive-baseline"}
for k in sorted(trie):
    ratio = base[k] / trie[k] if trie[k] else float("nan")
    print(f"k={k:6d}  trie {trie[k] * 1e3:7.2f} ms  baseline {base[k] * 1e3:8.2f} ms  ({ratio:5.1f}x)")

# %%
with open("scaling.svg", "w", encoding="utf-8") as fh:
    fh.write(render_plot(records))
print("wrote scaling.svg")
