"""Run the sensitivity pipeline on random (x, N_x) and tabulate what it did.

    python scripts/sensitivity_audit.py --runs 1000 --seed 3 --fiber a
"""

import argparse
import collections
import random
import sys

from cantorchaos import sampling
from cantorchaos.sensitivity import SensitivityConfig, sensitivity_witness, verify_sensitive


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--runs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fiber", default="a")
    ap.add_argument("--show", type=int, default=3, help="print this many full witnesses")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cfg = SensitivityConfig(args.fiber)
    branch = collections.Counter()
    times = collections.Counter()
    alphas = set()
    failures = 0
    for i in range(args.runs):
        x = sampling.random_point(rng)
        N = sampling.random_neighborhood(rng, x)
        w = sensitivity_witness(x, N, cfg)
        alphas.add(str(w.alpha))
        branch[(str(w.q), w.chosen_label)] += 1
        times[w.m] += 1
        if not verify_sensitive(x, w, N):
            failures += 1
        if i < args.show:
            print(f"x = {x}, N_x = {N}")
            for key, value in w.to_json().items():
                print(f"    {key:13s} {value}")

    print(f"\nruns {args.runs}, verifier failures {failures}, alpha {sorted(alphas)}")
    print("q / chosen branch:", dict(sorted(branch.items())))
    print("separation time m:", dict(sorted(times.items())))
    return 1 if failures or len(alphas) != 1 else 0


if __name__ == "__main__":
    sys.exit(main())
