"""Train the full model and the no-auxiliary-domain ablation, then compare their ND.

Usage::

    python3 demos/ablation_trend.py [OUT_DIR] [--seeds 0 1 2] [--steps 20000]

Runs land in ``OUT_DIR/{full,no_aux}_seed{s}`` (default ``runs/ablation``),
which is where ``tests/test_acceptance.py`` looks for them (override with
``DSRGAN_ABLATION_DIR``). Finished runs are skipped and interrupted ones
resume, so the script can be restarted at any time.
"""

import argparse
import logging
import time
from pathlib import Path

import numpy as np

from dsrgan import checkpoint as ckpt_io
from dsrgan.config import TrainConfig
from dsrgan.data import build_dataset, load_dataset
from dsrgan.metrics import FBPD, HIST, estimate_nd
from dsrgan.model import make_sampler
from dsrgan.training import run_training

REPO = Path(__file__).resolve().parents[1]

# Width and batch size are scaled down so six 20k-step runs fit a single CPU core.
BASE = dict(base_width=4, batch_size=16, checkpoint_every=1000)
VARIANTS = {"full": frozenset(), "no_aux": frozenset({"no_aux"})}


def train_one(out, data, variant, seed, steps):
    cfg = TrainConfig(**BASE, total_steps=steps, seed=seed, ablation=VARIANTS[variant])
    run_dir = out / f"{variant}_seed{seed}"
    if ckpt_io.checkpoint_path(run_dir, steps).exists():
        return run_dir
    resume = (run_dir / "latest").exists()
    t0 = time.time()
    run_training(cfg, data.target, data.auxiliary if variant == "full" else None, run_dir, resume=resume, progress_every=1000)
    logging.info("%s seed %d trained in %.0f s", variant, seed, time.time() - t0)
    return run_dir


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", nargs="?", default=str(REPO / "runs" / "ablation"))
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--steps", type=int, default=20_000)
    ap.add_argument("--images", type=int, default=5000)
    ap.add_argument("--pairs", type=int, default=2000)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    out = Path(args.out)
    data_dir = out / "data"
    if not (data_dir / "manifest.csv").exists():
        build_dataset(data_dir, args.images, seed=0)
    data = load_dataset(data_dir)

    rows = []
    for seed in args.seeds:
        for variant in VARIANTS:
            run_dir = train_one(out, data, variant, seed, args.steps)
            model, _ = ckpt_io.load_model(ckpt_io.checkpoint_path(run_dir, args.steps))
            r = estimate_nd(make_sampler(model), FBPD, HIST, args.pairs, seed=1000 + seed,
                            ds_dim=model.config.ds_dim, dr_dim=model.config.dr_dim)
            rows.append((variant, seed, r.nd, r.E_ds_vary_s, r.E_ds_vary_r, r.E_dr_vary_r, r.E_dr_vary_s))
            logging.info("%s seed %d: nd %.4f", variant, seed, r.nd)

    lines = ["variant,seed,nd,E_ds_vary_s,E_ds_vary_r,E_dr_vary_r,E_dr_vary_s"]
    lines += [f"{v},{s}," + ",".join(f"{x:.6f}" for x in vals) for v, s, *vals in rows]
    (out / "results.csv").write_text("\n".join(lines) + "\n")
    for variant in VARIANTS:
        med = np.median([r[2] for r in rows if r[0] == variant])
        print(f"median nd {variant}: {med:.4f}")


if __name__ == "__main__":
    main()
