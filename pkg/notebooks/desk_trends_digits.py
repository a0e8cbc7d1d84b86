"""
Desk-scale trends on the scikit-learn digits
============================================

The trend checks in the acceptance suite run on a 5,000-image CIFAR10
subsample.  When that data is not around, the same grid can be run on the
8x8 digits shipped with scikit-learn (upsampled to 16x16, 1,438 training and
359 test images, 5 tasks of 2 classes).  This is a proxy: the images are
tiny and the stream is short, so only the direction of each trend means
anything.

Usage::

    python notebooks/desk_trends_digits.py --loss-reduction mean --out notebooks/results/mean

Every cell is stored as a metrics record under ``--out`` and the script ends
by printing the three comparisons the acceptance criteria make.
"""

import argparse
import json
from pathlib import Path

from mvreplay.harness import RunConfig, format_table, run_experiment

parser = argparse.ArgumentParser()
parser.add_argument("--loss-reduction", choices=["sum", "mean"], default="mean")
parser.add_argument("--lr", type=float, default=0.1)
parser.add_argument("--seeds", default="0,1,2")
parser.add_argument("--out", default="notebooks/results/digits")
args = parser.parse_args()
seeds = tuple(int(s) for s in args.seeds.split(","))


def cell(p=1, mem_batch_size=200, daa=(0, 0, 0)):
    config = RunConfig(dataset="digits", arch="small_cnn", memory_size=200, mem_batch_size=mem_batch_size,
                       p=p, daa=daa, style_fallback=daa[2] > 0, seeds=seeds, lr=args.lr,
                       loss_reduction=args.loss_reduction, out=args.out)
    record = run_experiment(config)
    print(format_table([record]).splitlines()[-1], f"  {record.wall_clock / 60:.1f} min", flush=True)
    return record


# %%
# Number of views: p = 1..4 with |B_m| = 200 and q = 1.
views = {p: cell(p=p) for p in (1, 2, 3, 4)}

# %%
# Memory batch size: |B_m| in {10, 50, 200} with p = 1.
mem_batch = {10: cell(mem_batch_size=10), 50: cell(mem_batch_size=50), 200: views[1]}

# %%
# Domain-aware augmentations against plain views.  DAS uses the
# channel-statistics fallback.
daa = cell(p=4, daa=(1, 1, 1))
p7 = cell(p=7)

# %%
# The three comparisons, with the same rules as the acceptance suite.
m = {p: r.mean for p, r in views.items()}
s = {p: r.std for p, r in views.items()}
trend_views = all(m[p + 1] >= m[p] - max(s[p], s[p + 1]) for p in (1, 2, 3))
trend_mem = mem_batch[10].mean < mem_batch[50].mean < mem_batch[200].mean
daa_benefit = daa.mean >= p7.mean - 1.0 and daa.mean >= views[4].mean

summary = {
    "loss_reduction": args.loss_reduction,
    "lr": args.lr,
    "seeds": list(seeds),
    "views": {p: [r.mean, r.std] for p, r in views.items()},
    "mem_batch": {b: [r.mean, r.std] for b, r in mem_batch.items()},
    "daa_4_1_1_1_1": [daa.mean, daa.std],
    "views_7": [p7.mean, p7.std],
    "checks": {"views_non_decreasing": trend_views, "mem_batch_increasing": trend_mem,
               "daa_benefit": daa_benefit},
}
Path(args.out).mkdir(parents=True, exist_ok=True)
(Path(args.out) / "summary.json").write_text(json.dumps(summary, indent=2))
print(json.dumps(summary["checks"], indent=2))
