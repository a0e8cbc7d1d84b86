"""
Reservoir sampling replay memory
================================

The memory keeps a uniform sample of everything it has been offered, in a
fixed number of slots, without knowing how long the stream is.
"""

import numpy as np
from scipy import stats

from mvreplay.datastream import make_examples, StreamBatch
from mvreplay.memory import ReplayMemory

rng = np.random.default_rng(0)
M, n = 10, 1000
examples = make_examples(np.zeros((n, 1, 1, 1), np.float32), np.zeros(n, int))

# %%
# Until it is full the memory keeps everything; after that the n-th item
# gets in with probability M / n and replaces a random slot.
mem = ReplayMemory(M)
mem.update(StreamBatch(examples[:5], 0), rng)
print("after 5 offers:", mem.ids)
for ex in examples[5:]:
    mem.offer(ex, rng)
print("after 1000 offers:", sorted(mem.ids), "seen", mem.seen_count)

# %%
# Over many runs every item should be kept about M / n of the time.
counts = np.zeros(n)
for _ in range(2000):
    mem = ReplayMemory(M)
    for ex in examples:
        mem.offer(ex, rng)
    counts[mem.ids] += 1
freq = counts / 2000
print(f"inclusion frequency: mean {freq.mean():.4f} (M/n = {M / n}), min {freq.min():.4f}, max {freq.max():.4f}")
print("chi-square p-value:", stats.chisquare(counts).pvalue)

# %%
# Retrieval draws without replacement and returns fewer items when the
# memory holds fewer than asked for.
print(len(mem.retrieve(4, rng)), len(mem.retrieve(50, rng)))
