"""
Standard and domain-aware augmentations
=======================================

A view of an image can come from the usual crop/jitter/flip/grayscale
pipeline or from mixing it with another image of the current stream batch.
The mixing coefficient is drawn from U(0.5, 1) so the original image always
keeps at least half of the content.
"""

import numpy as np

from mvreplay.augment import (
    AugmentationSpec,
    StandardAugParams,
    build_view,
    dac,
    dam,
    das,
    sample_bbox,
    standard_augment,
)
from mvreplay.contrastive import build_many_view_batch
from mvreplay.datastream import load_digits_dataset

rng = np.random.default_rng(0)
train, _ = load_digits_dataset(size=16)
x_i, x_d = train[0].image, train[1].image

# %%
# Standard augmentation keeps shape and range; the identity parameters
# return the image untouched.
out = standard_augment(x_i, rng)
print(out.shape, out.min(), out.max())
print("identity:", np.array_equal(standard_augment(x_i, rng, StandardAugParams.identity()), x_i))

# %%
# Mixup with the donor, weighted by lambda.
print("dam(lam=1) is x_i:", np.array_equal(dam(x_i, x_d, 1.0), x_i))
print("dam(lam=0.75) pixel:", dam(x_i, x_d, 0.75)[8, 8], "=", 0.75 * x_i[8, 8] + 0.25 * x_d[8, 8])

# %%
# Cutmix pastes a donor box whose area is at most (1 - lambda) of the image.
box = sample_bbox(16, 16, 0.75, rng)
print(box, "area", box.area, "<=", 0.25 * 256)
mixed = dac(x_i, x_d, 0.75, rng)
print("pixels from the donor:", int(np.sum(np.any(mixed != x_i, axis=-1))))

# %%
# Style: without pretrained AdaIN weights the channel-statistics fallback
# gives x_i the per-channel mean and std of the donor.  The result is
# clipped to [0, 1], which shifts the moments a little on the mostly black
# digits.
styled = das(x_i, x_d, fallback=True)
print("means", styled.mean((0, 1)), x_d.mean((0, 1)))

# %%
# A many-view batch lays views out view-major: all raw images first, then
# each augmented view of every image.  Source ids tie the views together.
spec = AugmentationSpec(p=2, n_dam=1, n_dac=1, n_das=1)
batch = train[:4]
stream = np.stack([ex.image for ex in batch])
views = build_many_view_batch(batch, spec, stream, rng, style_fallback=True)
print(views.images.shape, views.view_kinds)
print(views.source_ids)
