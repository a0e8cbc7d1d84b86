"""
The multi-view contrastive loss
===============================

Every view in a batch carries the id of the example it came from.  Views
that share an id are positives of each other; every other view is a
negative.  This script checks the loss on a few hand-made batches.
"""

import math

import numpy as np
import torch

from mvreplay.contrastive import mvcont_loss, positive_sets

# %%
# Two sources with two identical views each.  Every similarity is the same,
# so each anchor spreads its softmax evenly over the 3 other views and the
# summed loss is 4 ln 3, whatever the temperature.
z = torch.tensor([[0.6, 0.8]] * 4, dtype=torch.float64)
for tau in (0.07, 0.5, 1.0):
    print(f"tau={tau}: {mvcont_loss(z, [7, 7, 3, 3], tau).item():.12f}  (4 ln 3 = {4 * math.log(3):.12f})")

# %%
# The positive set of a view is every other view with the same source id.
print(positive_sets([0, 0, 1, 1, 1]))

# %%
# When all views of a source coincide and sources are spread out, each anchor
# still splits its probability between its 3 positives, so the loss bottoms
# out at 32 ln 3.  Random embeddings at a low temperature score far worse
# than even the all-equal point 32 ln 31.
rng = np.random.default_rng(0)
centres = rng.normal(size=(8, 32))
centres /= np.linalg.norm(centres, axis=1, keepdims=True)
ids = np.repeat(np.arange(8), 4)
aligned = torch.tensor(centres[ids])
noise = torch.tensor(rng.normal(size=(32, 32)))
noise = noise / noise.norm(dim=1, keepdim=True)
print("aligned views:", mvcont_loss(aligned, ids, 0.07).item(), " floor:", 32 * math.log(3))
print("random views: ", mvcont_loss(noise, ids, 0.07).item(), " all equal:", 32 * math.log(31))

# %%
# The loss is a sum over anchors, so it grows with the number of views.
# Dividing by the view count gives the per-anchor mean used by
# ``loss_reduction="mean"``.
print("per anchor:", mvcont_loss(noise, ids, 0.07).item() / len(ids))
