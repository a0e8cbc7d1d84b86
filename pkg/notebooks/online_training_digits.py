"""
One pass of online training on the digits
=========================================

The stream is split into tasks of two classes each and read once, ten images
at a time.  Labels stay sealed during training; only the final evaluation
unseals the memory and the test set to fit a nearest-class-mean classifier
on the encoder features.
"""

import numpy as np

from mvreplay.datastream import build_task_sequence, load_digits_dataset, stream_batches
from mvreplay.evaluator import evaluate_final
from mvreplay.memory import ReplayMemory
from mvreplay.model import build_model
from mvreplay.trainer import TrainConfig, init_seed, train_online

train, test = load_digits_dataset(size=16)
sequence = build_task_sequence(train, num_tasks=5, seed=0)
print("tasks:", sequence.task_classes)

# %%
# Accuracy of an untrained encoder, as a reference point.
model = build_model("small_cnn", seed=init_seed(0), image_size=16)
mem = ReplayMemory(200)
rng = np.random.default_rng(0)
for batch in stream_batches(sequence, 10):
    mem.update(batch, rng)
print("untrained encoder:", evaluate_final(model, mem, test).final_average_accuracy)

# %%
# Train with two standard views per image.  The summed loss grows with the
# number of views, so this run averages over anchors to keep lr = 0.1 stable.
config = TrainConfig(p=2, loss_reduction="mean", seed=0)
model = build_model("small_cnn", seed=init_seed(0), image_size=16)
result = train_online(stream_batches(sequence, config.stream_batch_size), config, model)
losses = [s.loss for s in result.steps]
print(f"{len(losses)} steps, loss {np.mean(losses[:10]):.3f} -> {np.mean(losses[-10:]):.3f}")

# %%
# Final average accuracy from the memory alone.
res = evaluate_final(result.model, result.memory, test)
print("final AA:", res.final_average_accuracy)
print("per class:", {k: round(v, 1) for k, v in res.per_class_accuracy.items()})
